#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "negtorus/diagram.hpp"
#include "negtorus/linalg.hpp"

namespace negtorus {

// framed link with rotation labels; Q holds framings on the diagonal and linking off it
struct KirbyDiagram {
  std::vector<std::string> names;
  std::vector<std::int64_t> labels;
  IntMat Q;
  std::size_t size() const { return names.size(); }
  std::size_t index(const std::string& name) const;
};

// the moves used by the Figure-3 pipeline
KirbyDiagram blow_up(const KirbyDiagram& d, const std::string& name, int sign, const std::vector<std::int64_t>& links,
                     std::int64_t label);
KirbyDiagram blow_down(const KirbyDiagram& d, std::size_t i);
// replace a by a + s*b (s = -1 slides over the reversed curve)
KirbyDiagram handle_slide(const KirbyDiagram& d, std::size_t a, std::size_t b, int s);
// remove a curve k together with a 0-framed meridian mu
KirbyDiagram cancel_pair(const KirbyDiagram& d, std::size_t k, std::size_t mu);

// c^2 - 3 sigma - 2 n of a labelled diagram
Rational characteristic_quantity(const KirbyDiagram& d);

struct Figure3Stages {
  KirbyDiagram first, second, third;
};

Figure3Stages figure3_stages(const Presentation& pr);
KirbyDiagram figure2_surgered(const Presentation& pr);

struct LensChain {
  std::vector<std::int64_t> framings;
  std::vector<std::int64_t> rots;
  auto operator<=>(const LensChain&) const = default;
};

LensChain figure3_reduce(const Presentation& pr);
// (u, v) with u/v = [ -framings ]
std::pair<Int, Int> lens_parameters(const LensChain& c);
bool legal_lens_chain(const LensChain& c);

struct LensReport {
  std::int64_t p = 0, q = 0;
  Int u, v;
  Int honda;
  std::size_t image_size = 0;
  std::vector<std::vector<std::size_t>> fibers;  // enumeration indices mapping to a common chain
  bool lens_type_ok = false;       // u = pq+1 and v is p^2 or its inverse mod u
  bool stages_ok = false;          // |det| = pq+1 at every stage
  bool spinc_consistent = false;   // characteristic quantity shifts are constant
  bool ok() const { return lens_type_ok && stages_ok && spinc_consistent && Int(image_size) == honda; }
};

LensReport surjectivity_check(const TorusKnotParams& tk);

void to_json(nlohmann::json& j, const LensChain& c);
void to_json(nlohmann::json& j, const LensReport& r);

}  // namespace negtorus
