#pragma once

// Direct simulation of the box-and-ball system on the line (BbsState) and on
// a ring of L boxes (PbbsState), soliton-content extraction by 10-elimination
// and the vacuum-append operator.
//
// State strings use '.' for an empty box and '1' for a ball; '0' is accepted
// for empty on input. Position n = 0 is the first character.

#include <cstdint>
#include <string>
#include <vector>

namespace tropbbs {

struct BbsState {
    long offset = 0;             // position of cells[0] on the infinite line
    std::vector<uint8_t> cells;  // finite window; everything outside is 0

    long ball_count() const;
    // Cell value at absolute position n (0 outside the window).
    int at(long n) const;
};

struct PbbsState {
    std::vector<uint8_t> cells;  // length L

    long size() const { return static_cast<long>(cells.size()); }
    long ball_count() const;
};

// Throws std::invalid_argument on characters outside {'.','0','1'}.
BbsState parse_bbs(const std::string& s);
PbbsState parse_pbbs(const std::string& s);

std::string to_string(const BbsState& s, long from, long to);  // window [from,to)
std::string to_string(const PbbsState& s);

// One step of the infinite BBS: every ball moves once to the nearest empty
// box to its right. The window grows as needed; ball count is conserved.
BbsState bbs_step(const BbsState& s);

// One step of the periodic BBS by iterated 1-0 pairing (equivalently the
// infinite-capacity carrier rule). Requires ball count < L/2; throws
// std::domain_error("overfull periodic state") otherwise.
PbbsState pbbs_step(const PbbsState& s);

// Conserved soliton lengths S_1 <= ... <= S_g via 10-elimination.
std::vector<long> soliton_content(const PbbsState& s);

// Appends m empty boxes on the right (system size L -> L + m).
PbbsState append_vacuum(const PbbsState& s, long m);

// True if row `next` is the bbs_step image of row `cur` on a window that
// contains every ball of both with slack; used by verification paths.
bool bbs_evolution_holds(const BbsState& cur, const BbsState& next);

}  // namespace tropbbs
