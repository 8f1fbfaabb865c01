#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <vector>

#include <json.hpp>

#include "negtorus/arith.hpp"

namespace negtorus {

struct AlexanderPolynomial {
  std::vector<std::int64_t> exponents;  // strictly decreasing
  std::vector<int> coefficients;        // +1, -1, +1, ...
};

// symmetrized (t^{pq}-1)(t-1)/((t^p-1)(t^q-1))
AlexanderPolynomial alexander(std::int64_t p, std::int64_t q);

struct StaircaseGenerator {
  std::int64_t A = 0, M = 0;
};

// arrow x_from -> U^u V^v x_to of the full staircase
struct StaircaseArrow {
  std::size_t from = 0, to = 0;
  std::int64_t u_power = 0, v_power = 0;
};

struct StaircaseComplex {
  std::vector<StaircaseGenerator> generators;
  std::vector<StaircaseArrow> arrows;
};

StaircaseComplex staircase(const AlexanderPolynomial& a);

struct Tower {
  std::optional<std::int64_t> order;  // empty = infinite
  std::int64_t A = 0, M = 0;          // bottom of a finite tower, top of the infinite one
  auto operator<=>(const Tower&) const = default;
};

struct GradedModule {
  std::vector<Tower> towers;  // kept sorted
  bool operator==(const GradedModule&) const = default;
};

// Alexander-homogeneous part of the differential over F2[U], as 0/1 incidence;
// row = target generator, column = source generator
struct GradedMatrix {
  std::vector<std::vector<std::uint8_t>> entries;
  std::vector<StaircaseGenerator> rows, cols;
};

GradedMatrix hfk_differential(const StaircaseComplex& c);
// homology of a two-term complex C1 -> C0 by graded Smith reduction (minimal-degree pivots)
GradedModule graded_homology(GradedMatrix d);
bool differential_squares_to_zero(const StaircaseComplex& c);

GradedModule hfk_minus(std::int64_t p, std::int64_t q);
GradedModule hfk_closed_form(std::int64_t p, std::int64_t q);

struct Bidegree {
  std::int64_t A = 0, M = 0;
  auto operator<=>(const Bidegree&) const = default;
};

std::vector<Bidegree> tower_bottoms(const GradedModule& m);
std::optional<Tower> infinite_tower(const GradedModule& m);
// whether U kills the element at (A,M) lying in some finite tower
bool u_annihilated(const GradedModule& m, Bidegree b);
// sum over towers of (-1)^M t^A, as exponent -> coefficient (zero entries dropped)
std::vector<std::pair<std::int64_t, std::int64_t>> euler_characteristic(const GradedModule& m);
std::vector<std::pair<std::int64_t, std::int64_t>> alexander_terms(const AlexanderPolynomial& a);

struct MatchReport {
  std::int64_t p = 0, q = 0;
  std::vector<Bidegree> realized;
  std::vector<Bidegree> unrealized;
  std::vector<Bidegree> misses;  // class locations that are not bottoms
  std::size_t transverse_classes = 0;
  bool ok() const { return misses.empty() && realized.size() == transverse_classes; }
};

MatchReport match_invariants(std::int64_t p, std::int64_t q);

void to_json(nlohmann::json& j, const Tower& t);
void to_json(nlohmann::json& j, const GradedModule& m);
void from_json(const nlohmann::json& j, GradedModule& m);
void to_json(nlohmann::json& j, const Bidegree& b);
void to_json(nlohmann::json& j, const MatchReport& r);

}  // namespace negtorus
