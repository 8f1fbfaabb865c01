#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "negtorus/arith.hpp"

namespace negtorus {

struct ChainSpec {
  std::vector<std::int64_t> tbs;
  bool operator==(const ChainSpec&) const = default;
};

// one chain of Legendrian unknots with their rotation numbers
struct Chain {
  std::vector<std::int64_t> tbs;
  std::vector<std::int64_t> rots;
  auto operator<=>(const Chain&) const = default;
  std::size_t size() const { return tbs.size(); }
};

enum class Sign { Positive, Negative };

struct Presentation {
  std::int64_t p = 0, q = 0;
  Chain chain1, chain2;
  std::int64_t stab_pos = 0, stab_neg = 0;

  std::int64_t ell() const { return stab_pos + stab_neg; }
  auto operator<=>(const Presentation&) const = default;
};

// the two chains of the Figure-2 style diagram for T(p,-q)
struct Figure2Shape {
  TorusKnotParams params;
  NegCF cf1, cf2;
  ChainSpec spec1, spec2;
};

ChainSpec chain_spec_from_cf(const NegCF& cf);
ChainSpec expand_contact_surgery(const Rational& coeff);
Figure2Shape figure2_shape(const TorusKnotParams& tk);

std::vector<std::int64_t> rotation_range(std::int64_t tb);
bool legal_rotation(std::int64_t tb, std::int64_t rot);

bool is_fully_positive(std::int64_t tb, std::int64_t rot);
bool is_fully_negative(std::int64_t tb, std::int64_t rot);
bool chain_fully_positive(const Chain& c, std::size_t upto);
bool chain_fully_negative(const Chain& c, std::size_t upto);

Int presentation_count(const TorusKnotParams& tk, std::int64_t ell);
std::vector<Presentation> enumerate_presentations(const TorusKnotParams& tk, std::int64_t ell);

bool is_valid(const Presentation& pr);
bool is_ambient_tight(const Presentation& pr);
bool is_balanced_strict(const Presentation& pr);

Presentation stabilize(const Presentation& pr, Sign s);
Presentation conjugate(const Presentation& pr);

void to_json(nlohmann::json& j, const Chain& c);
void from_json(const nlohmann::json& j, Chain& c);
void to_json(nlohmann::json& j, const Presentation& pr);
void from_json(const nlohmann::json& j, Presentation& pr);
std::string canonical_key(const Presentation& pr);

}  // namespace negtorus
