#ifndef GOG_HCONJ_HPP
#define GOG_HCONJ_HPP

#include <cstdint>
#include <optional>

#include "gog/iso.hpp"

namespace gog {

// One H-conjugation step from the front: w |-> (r0 t1)^-1 w H_*(r0 t1).
// Path length stays equal or drops by 2.
PathWord h_elementary_op(const GogIso& H, const PathWord& w);

// The mirror step from the back, w |-> (H^-1)_*(tq rq) w (tq rq)^-1; kept as a
// cross-check helper for the front sweep.
PathWord h_elementary_op_back(const GogIso& H, const PathWord& w);

// Cannot be shortened by the elementary operation (length 0 counts).
bool is_h_reduced(const GogIso& H, const PathWord& w);

struct HReduction {
  PathWord input;
  PathWord reduced;   // H-reduced
  PathWord witness;   // reduced = witness^-1 * input * H_*(witness)
  std::size_t h_length = 0;
};
HReduction h_reduce(const GogIso& H, const PathWord& w);

std::size_t h_length(const GogIso& H, const PathWord& w);

// Witness for H-length zero: w = (H^-1)_*(gamma) * g * gamma^-1 with g a
// vertex-group element. Blow-ups call this with H = H0^-1, turning the
// identity into w = H0_*(gamma) * g * gamma^-1, the shape the blow-up planner needs.
struct ZeroWitness {
  PathWord gamma;
  GroupElement g;
  std::string vertex;
};
std::optional<ZeroWitness> is_h_zero(const GogIso& H, const PathWord& w);

// Bounded search for a conjugator u with w1 = u * w2 * H_*(u)^-1: all dart
// paths of length <= max_len from the start of w1, vertex slots filled from
// {1} and single-generator powers g^k, |k| <= 2. A miss is not a disproof.
std::optional<PathWord> h_conjugate_bounded(const GogIso& H, const PathWord& w1,
                                            const PathWord& w2, std::size_t max_len);

}  // namespace gog

#endif
