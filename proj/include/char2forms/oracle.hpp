#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "char2forms/lie.hpp"
#include "char2forms/matrix.hpp"

namespace char2forms {

enum class Predicate { nondeg_nonsym, nondeg_sym, all_sym, all };
enum class Equivalence { congruence, sociological, albert };

std::string predicate_name(Predicate p);
std::string equivalence_name(Equivalence e);
Predicate parse_predicate(const std::string& s);
Equivalence parse_equivalence(const std::string& s);

/// Exhaustive GF(2) class census over all 2^(n^2) matrices, n <= 4.
/// Classes are listed when they contain a matrix satisfying the predicate;
/// sizes count only satisfying matrices and representatives are the
/// lexicographically smallest satisfying members (row-major entry order).
struct OrbitCensus {
  int n = 0;
  Predicate predicate = Predicate::all;
  Equivalence equivalence = Equivalence::congruence;
  std::vector<Matrix> representatives;
  std::vector<std::uint64_t> orbit_sizes;
  std::vector<std::int32_t> class_ids;  // packed matrix -> class index, -1 if filtered out

  int class_count() const { return static_cast<int>(representatives.size()); }
};
OrbitCensus enumerate_classes(int n, Predicate predicate, Equivalence equivalence);
/// Class index of a matrix in the census partition (-1 when its class has
/// no predicate-satisfying member).
int census_class_of(const OrbitCensus& census, const Matrix& m);

struct LieClusters {
  std::vector<Fingerprint> fingerprints;          // one per input
  std::vector<std::vector<int>> clusters;         // indices into the input list
};
/// Clusters forms by the fingerprint of their preserver algebras.
LieClusters lie_equiv_cluster(const std::vector<Matrix>& reps);

/// Independent preserver oracle: scans all 2^(n^2) GF(2) matrices for
/// X^T B + B X = 0 (n <= 4).
AlgebraBasis brute_preserver(const Matrix& b);

std::uint64_t gl_order(int n);

// Packed GF(2) helpers for n <= 5 (bit (i,j) at position i*n+j), shared
// with the acceptance suite's independent brute-force searches.
std::uint32_t pack_gf2(const Matrix& m);
Matrix unpack_gf2(std::uint32_t bits, int n);
std::uint32_t packed_mul(std::uint32_t a, std::uint32_t b, int n);
std::uint32_t packed_transpose(std::uint32_t a, int n);
std::uint32_t packed_congruence(std::uint32_t g, std::uint32_t b, int n);
bool packed_invertible(std::uint32_t a, int n);
bool packed_symmetric(std::uint32_t a, int n);
/// All elements of GL(n, 2), ascending in packed encoding.
std::vector<std::uint32_t> all_invertible_packed(int n);

}  // namespace char2forms
