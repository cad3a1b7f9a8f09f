#pragma once

#include "bvc/election.hpp"

namespace fixtures {

// Candidates a=0, b=1, c=2, d=3.
inline constexpr bvc::CandidateId A = 0, B = 1, C = 2, D = 3;

inline bvc::FallbackVote vote(std::initializer_list<bvc::CandidateId> ids) {
  return bvc::FallbackVote(std::vector<bvc::CandidateId>(ids));
}

// v1..v3: a c b d; v4,v5: b d c a; v6: d a c b
inline bvc::Election six_voters() {
  return bvc::Election(4, {vote({A, C, B, D}), vote({A, C, B, D}), vote({A, C, B, D}), vote({B, D, C, A}),
                           vote({B, D, C, A}), vote({D, A, C, B})});
}

// v1: a c b d; v2: d c a b; v3,v4: b a c d
inline bvc::Election four_voters() {
  return bvc::Election(4, {vote({A, C, B, D}), vote({D, C, A, B}), vote({B, A, C, D}), vote({B, A, C, D})});
}

}  // namespace fixtures
