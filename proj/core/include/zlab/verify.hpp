#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "zlab/cohomology.hpp"

namespace zlab {

/// Outcome of one theorem-level check. Everything except wall_time_ms is
/// deterministic given the parameters and seed.
struct VerificationReport {
  std::string theorem;
  std::vector<std::pair<std::string, std::int64_t>> params;
  bool pass = false;
  std::uint64_t seed = 0;
  double wall_time_ms = 0.0;
  std::vector<std::pair<std::string, std::int64_t>> metrics;
  std::vector<std::pair<std::string, std::string>> notes;  // counterexample payloads

  void metric(const std::string& key, std::int64_t value) { metrics.emplace_back(key, value); }
  void note(const std::string& key, const std::string& value) { notes.emplace_back(key, value); }

  std::string to_text() const;
  std::string to_json_string() const;
};

/// Kernel-intersection characterization of the filtration: inside S/S_{n+1},
/// the intersection of the kernels of all representations into the
/// n-dimensional unipotent group equals the level-n filtration image.
VerificationReport verify_theorem_A(int k, int p, int n, unsigned threads = 1);

/// Perfect pairing between S_n/S_{n+1} and the n-fold Massey subgroup of
/// H^2(S/S_n), and identification of that subgroup with the kernel of
/// inflation to H^2(S/S_{n+1}).
VerificationReport verify_theorem_B(int k, int p, int n);

/// Pairing values against the Massey classes psi_w agree with the Magnus
/// coefficients eps_w on sampled elements of S_n.
VerificationReport verify_fundamental_duality(int k, int p, int n, int samples,
                                              std::uint64_t seed);

/// Two-fold Massey products equal minus the cup product, classwise.
VerificationReport verify_massey_cup(int k, int p);

/// Structure of the 3x3 unipotent group: dihedral of order 8 at p=2,
/// extraspecial of order 27 and exponent 3 at p=3.
VerificationReport identify_small_groups(int p);

/// Group-theoretic generators vs the series criterion give the same
/// filtration subgroups inside S/S_m, for every level n <= m.
VerificationReport verify_filtration_agreement(int k, int p, int m);

std::vector<VerificationReport> verify_standard_suite(unsigned threads = 1,
                                                      std::uint64_t seed = 1);
std::vector<VerificationReport> verify_extended_suite(unsigned threads = 1,
                                                      std::uint64_t seed = 1);

}  // namespace zlab
