#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include <json.hpp>

#include "negtorus/diagram.hpp"
#include "negtorus/linalg.hpp"

namespace negtorus {

// Smooth linking matrix of the Figure-2 diagram.
// Curve order: c1, c2 (contact +1 curves), lead1, lead2, tail of chain1, tail of chain2, [L].
struct LinkingMatrix {
  IntMat Q;
  std::vector<std::int64_t> framings;
  std::size_t surgery_curves = 0;  // curves other than L
  bool has_knot = false;
};

LinkingMatrix linking_matrix(const Figure2Shape& shape, bool with_knot, std::int64_t knot_framing = 0);

// per-(p,q) cached data; everything depending only on the smooth diagram
struct SurgeryModel {
  Figure2Shape shape;
  LinkingMatrix lm;
  Int detQ;
  RatMat Qinv;
  int sigma = 0;
  Rational tb_correction;       // det(Q with L at framing 0) / det(Q)
  std::vector<Int> weights1;    // rot(L) = stab_pos - stab_neg + sum w_i r_i
  std::vector<Int> weights2;
};

std::shared_ptr<const SurgeryModel> surgery_model(const TorusKnotParams& tk);
std::shared_ptr<const SurgeryModel> surgery_model(std::int64_t p, std::int64_t q);

struct ClassicalInvariants {
  std::int64_t tb = 0, rot = 0, d3 = 0;
  std::int64_t A = 0, M = 0;
  auto operator<=>(const ClassicalInvariants&) const = default;
};

std::int64_t compute_tb(const Presentation& pr);
std::int64_t compute_rot(const Presentation& pr);
std::int64_t compute_d3(const Presentation& pr);
// c^2 = r^T Q^{-1} r of the rotation vector
Rational characteristic_square(const Presentation& pr);
ClassicalInvariants compute_invariants(const Presentation& pr);

struct Bigrading {
  std::int64_t A = 0, M = 0;
  auto operator<=>(const Bigrading&) const = default;
};
Bigrading bigrading(std::int64_t tb, std::int64_t rot, std::int64_t d3);

struct SmoothReport {
  std::int64_t p = 0, q = 0, ell = 0;
  Int det_ambient;
  bool ambient_s3 = false;
  Int surgered_order;
  bool order_ok = false;
  std::vector<Int> homology;       // nontrivial invariant factors of H1 after surgery
  bool cyclic = false;
  Int linking_numerator;            // lambda(g,g) = linking_numerator / surgered_order on a generator
  bool lens_type_ok = false;        // matches L(pq+1+ell, p^2) up to squares, sign and inversion
  bool ok() const { return ambient_s3 && order_ok && (ell != 0 || (cyclic && lens_type_ok)); }
};

SmoothReport validate_smooth_topology(const TorusKnotParams& tk, std::int64_t ell = 0);

// linking-form test: does lambda = a/u agree with some L(u, v) form, up to k^2 and sign
bool linking_form_matches(const Int& a, const Int& u, const Int& v);

void to_json(nlohmann::json& j, const ClassicalInvariants& c);
void to_json(nlohmann::json& j, const SmoothReport& r);

}  // namespace negtorus
