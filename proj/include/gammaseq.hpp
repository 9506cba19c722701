#pragma once

// Everything except the command-line front end (gammaseq/cli/run.hpp),
// which needs CLI11.

#include "gammaseq/abelian/end_ring.hpp"
#include "gammaseq/abelian/enumerate.hpp"
#include "gammaseq/abelian/group.hpp"
#include "gammaseq/abelian/hom_group.hpp"
#include "gammaseq/abelian/homomorphism.hpp"
#include "gammaseq/abelian/integer.hpp"
#include "gammaseq/abelian/matrix.hpp"
#include "gammaseq/abelian/presentation.hpp"
#include "gammaseq/abelian/smith.hpp"
#include "gammaseq/abelian/tensor.hpp"
#include "gammaseq/cli/group_expr.hpp"
#include "gammaseq/cli/json_io.hpp"
#include "gammaseq/constructions/builders.hpp"
#include "gammaseq/constructions/lemmas.hpp"
#include "gammaseq/errors.hpp"
#include "gammaseq/gamma/end_gamma.hpp"
#include "gammaseq/gamma/omega.hpp"
#include "gammaseq/gamma/omega_brute.hpp"
#include "gammaseq/gamma/sequence.hpp"
#include "gammaseq/rings/finite_ring.hpp"
#include "gammaseq/rings/invariants.hpp"
#include "gammaseq/rings/iso.hpp"
#include "gammaseq/rings/products.hpp"
#include "gammaseq/rings/sequence_pullback.hpp"
#include "gammaseq/rings/units.hpp"
#include "gammaseq/search/groups.hpp"
#include "gammaseq/search/sequences.hpp"
#include "gammaseq/search/survey.hpp"
