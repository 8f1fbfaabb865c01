#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "negtorus/diagram.hpp"
#include "negtorus/invariants.hpp"

namespace negtorus {

// A reading of a presentation with line X fully positive from its leader up to index j
// and line Y fully negative up to index k. swapped = false means X is chain1.
struct PatternForm {
  bool swapped = false;
  std::size_t j = 0, k = 0;
  std::optional<std::int64_t> p_next, p_next2;  // positive stabilizations of X[j+1], X[j+2]
  std::optional<std::int64_t> n_next, n_next2;  // negative stabilizations of Y[k+1], Y[k+2]
  std::vector<std::int64_t> x_rots, y_rots;     // full rotation arrays of the two lines
  bool degenerate = false;                      // missing or zero parameter, or vacuous unknot in a prefix
};

std::int64_t positive_stabs(std::int64_t tb, std::int64_t rot);
std::int64_t negative_stabs(std::int64_t tb, std::int64_t rot);

std::vector<PatternForm> decode_patterns(const Presentation& pr);
Presentation encode_pattern(const PatternForm& pf, const Presentation& shape_of);

enum class MoveFamily { Shifted, Literal };
enum class MoveKind { D, E };

struct Move {
  MoveFamily family;
  MoveKind kind;
  PatternForm form;
  std::int64_t amount = 0;  // D or E
  Presentation result;
};

std::vector<Move> candidate_moves(const Presentation& pr);

bool nonvanishing_condition(const Presentation& pr);

enum class Clause { NoExtremeLoose = 1, ExtremeKnotSingleton = 2, OppositeLeaders = 3, Unmatched = 4 };
Clause looseness_clause(const Presentation& pr);

struct SearchVerdict {
  bool loose = false;
  bool degenerate_dependent = false;
};
// the b^{m+1} search over all decodings of one presentation
SearchVerdict b_search(const Presentation& pr);

struct ClassFlags {
  bool tight_ambient = false;
  bool loose = false;
  bool strongly_nonloose = false;
  bool transverse = false;
  bool degenerate_decoding = false;
};

struct EquivClass {
  std::vector<Presentation> members;  // sorted
  Presentation representative;
  ClassFlags flags;
  ClassicalInvariants invariants;
  Clause clause = Clause::Unmatched;
};

struct ClassifyOptions {
  bool guard = true;              // apply a move only if it preserves (tb, rot, d3) and ambient type
  bool reverse_readings = false;  // consult the swapped line reading first
};

struct RejectedMove {
  Presentation from, to;
  std::string reason;
};

struct ClassifyResult {
  std::int64_t p = 0, q = 0, ell = 0;
  std::vector<EquivClass> classes;
  std::size_t moves_applied = 0;
  std::vector<RejectedMove> rejected;
  std::size_t fillable_count() const;
};

ClassifyResult classify_stabilized(const TorusKnotParams& tk, std::int64_t ell, const ClassifyOptions& opt = {});

std::vector<EquivClass> transverse_classes(const TorusKnotParams& tk);

// whether the single positive stabilization of a presentation is loose
bool positive_stab_looseness(const Presentation& pr);
// whether the single negative stabilization is strongly non-loose
bool negative_stab_nonloose(const Presentation& pr);

std::string to_string(MoveFamily f);
std::string to_string(Clause c);
void to_json(nlohmann::json& j, const ClassFlags& f);
void to_json(nlohmann::json& j, const EquivClass& c);
void to_json(nlohmann::json& j, const ClassifyResult& r);

}  // namespace negtorus
