#pragma once

#include "gammaseq/abelian/end_ring.hpp"
#include "gammaseq/rings/invariants.hpp"
#include "gammaseq/search/sequences.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <map>
#include <mutex>
#include <thread>
#include <vector>

namespace gammaseq {

struct Fp3Hit {
  std::uint64_t p;
  SequenceRecord record;
  RingInvariants invariants;
};

struct TrivialAutEntry {
  SequenceRecord record;
  bool degenerate;
};

struct SurveyReport {
  SearchBounds bounds;
  std::uint64_t sequences_examined = 0;
  std::optional<std::uint64_t> iso_classes;  ///< set when dedupe is on
  std::map<RingInvariants, std::uint64_t> ring_fingerprint_histogram;
  std::vector<Fp3Hit> fp3_hits;
  std::vector<TrivialAutEntry> trivial_aut_sequences;
};

/// Result of examining one sequence.
struct SequenceSurvey {
  RingInvariants invariants;
  std::vector<std::uint64_t> fp3_primes;  ///< p with End(Γ) = F_p^3
};

inline std::uint64_t cube(std::uint64_t p) { return p * p * p; }

/// End(Γ) invariants plus the F_p^3 test for each p. Tables are only
/// built when |End(Γ)| = p^3; any other order rules F_p^3 out.
inline SequenceSurvey survey_sequence(const GammaSequence& s, const std::vector<std::uint64_t>& primes) {
  EndGammaAlgebra alg(s);
  SequenceSurvey out{alg.invariants(), {}};
  for (auto p : primes) {
    if (out.invariants.order != cube(p)) continue;
    if (is_product_of_prime_fields(alg.ring(), p, 3)) out.fp3_primes.push_back(p);
  }
  return out;
}

/// Runs fn(k) for k < n on `jobs` threads; rethrows the first exception.
template <class Fn>
void parallel_for(std::size_t n, unsigned jobs, Fn&& fn) {
  if (jobs <= 1 || n <= 1) {
    for (std::size_t k = 0; k < n; ++k) fn(k);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  std::vector<std::thread> workers;
  for (unsigned w = 0; w < std::min<std::size_t>(jobs, n); ++w)
    workers.emplace_back([&] {
      for (std::size_t k; (k = next++) < n;) {
        try {
          fn(k);
        } catch (...) {
          std::lock_guard<std::mutex> lock(error_mutex);
          if (!error) error = std::current_exception();
          next = n;
        }
      }
    });
  for (auto& t : workers) t.join();
  if (error) std::rethrow_exception(error);
}

/// Survey over enumerate_sequences(bounds). Results are merged in
/// enumeration order, so the report does not depend on `jobs`.
inline SurveyReport survey(const SearchBounds& bounds) {
  SurveyReport report;
  report.bounds = bounds;
  std::vector<SequenceRecord> records = enumerate_sequences(bounds);
  std::vector<SequenceSurvey> results(records.size());
  parallel_for(records.size(), bounds.jobs,
               [&](std::size_t k) { results[k] = survey_sequence(records[k].sequence, bounds.primes); });
  report.sequences_examined = records.size();
  if (bounds.dedupe) report.iso_classes = records.size();
  for (std::size_t k = 0; k < records.size(); ++k) {
    const auto& res = results[k];
    ++report.ring_fingerprint_histogram[res.invariants];
    for (auto p : res.fp3_primes) report.fp3_hits.push_back({p, records[k], res.invariants});
    if (res.invariants.unit_count == 1) {
      const bool degenerate = validate_sequence(records[k].sequence).degenerate;
      report.trivial_aut_sequences.push_back({records[k], degenerate});
    }
  }
  return report;
}

/// Replays a hit: recomputes End(Γ) from scratch and re-runs the test.
inline bool replay_fp3_hit(const Fp3Hit& hit) {
  return is_product_of_prime_fields(end_gamma(hit.record.sequence).ring, hit.p, 3);
}

struct Fp2Hit {
  FgAbGroup group;
  std::uint64_t p;
};

struct Fp2Report {
  std::uint64_t max_order = 0;
  std::vector<std::uint64_t> primes;
  std::uint64_t groups_checked = 0;
  std::uint64_t rings_materialized = 0;  ///< End(G) of order p^2 for some p
  std::vector<Fp2Hit> hits;
};

/// Looks for G with End(G) = F_p^2. |End(G)| is read off the Hom
/// parametrization; only rings of order p^2 are built and tested.
inline Fp2Report fp2_not_end(std::uint64_t max_order, const std::vector<std::uint64_t>& primes) {
  Fp2Report report;
  report.max_order = max_order;
  report.primes = primes;
  for (auto p : primes)
    if (!is_prime(Integer(p))) throw PreconditionError("not a prime: " + std::to_string(p));
  for (const auto& g : enumerate_groups(max_order)) {
    ++report.groups_checked;
    const Integer order = end_ring_order(g);
    for (auto p : primes) {
      if (order != Integer(p) * p) continue;
      ++report.rings_materialized;
      if (is_product_of_prime_fields(end_ring(g), p, 2)) report.hits.push_back({g, p});
    }
  }
  return report;
}

}  // namespace gammaseq
