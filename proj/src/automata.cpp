#include "tropbbs/automata.hpp"

#include <algorithm>
#include <stdexcept>

namespace tropbbs {

namespace {

std::vector<uint8_t> parse_cells(const std::string& s) {
    std::vector<uint8_t> cells;
    cells.reserve(s.size());
    for (char c : s) {
        if (c == '1')
            cells.push_back(1);
        else if (c == '.' || c == '0')
            cells.push_back(0);
        else
            throw std::invalid_argument(std::string("invalid state character '") + c + "'");
    }
    return cells;
}

std::string render(const std::vector<uint8_t>& cells) {
    std::string s;
    s.reserve(cells.size());
    for (uint8_t c : cells) s.push_back(c ? '1' : '.');
    return s;
}

}  // namespace

long BbsState::ball_count() const {
    long n = 0;
    for (uint8_t c : cells) n += c;
    return n;
}

int BbsState::at(long n) const {
    long i = n - offset;
    if (i < 0 || i >= static_cast<long>(cells.size())) return 0;
    return cells[i];
}

long PbbsState::ball_count() const {
    long n = 0;
    for (uint8_t c : cells) n += c;
    return n;
}

BbsState parse_bbs(const std::string& s) { return BbsState{0, parse_cells(s)}; }

PbbsState parse_pbbs(const std::string& s) { return PbbsState{parse_cells(s)}; }

std::string to_string(const BbsState& s, long from, long to) {
    std::string out;
    for (long n = from; n < to; ++n) out.push_back(s.at(n) ? '1' : '.');
    return out;
}

std::string to_string(const PbbsState& s) { return render(s.cells); }

BbsState bbs_step(const BbsState& s) {
    // U'_n = min[1 - U_n, sum_{k<n} U_k - sum_{k<n} U'_k], swept left to right.
    // Every ball moves right, none past the old rightmost ball + ball count.
    const long balls = s.ball_count();
    BbsState out;
    out.offset = s.offset;
    if (balls == 0) {
        out.cells.assign(s.cells.size(), 0);
        return out;
    }
    const long end = s.offset + static_cast<long>(s.cells.size()) + balls;
    long sum_old = 0, sum_new = 0;
    for (long n = s.offset; n < end; ++n) {
        int u = s.at(n);
        long v = std::min<long>(1 - u, sum_old - sum_new);
        out.cells.push_back(static_cast<uint8_t>(v));
        sum_old += u;
        sum_new += v;
    }
    return out;
}

PbbsState pbbs_step(const PbbsState& s) {
    const long L = s.size();
    if (2 * s.ball_count() >= L) throw std::domain_error("overfull periodic state");
    PbbsState out;
    out.cells.assign(L, 0);
    // Cyclic 1-0 pairing: each ball matches the nearest following empty box
    // not already taken; two sweeps suffice since balls < empties.
    std::vector<uint8_t> used(L, 0), moved(L, 0);
    std::vector<long> stack;
    for (long pass = 0; pass < 2; ++pass) {
        for (long i = 0; i < L; ++i) {
            if (s.cells[i]) {
                if (!moved[i]) {
                    moved[i] = 1;
                    stack.push_back(i);
                }
            } else if (!stack.empty() && !used[i]) {
                stack.pop_back();
                used[i] = 1;
                out.cells[i] = 1;
            }
        }
    }
    return out;
}

std::vector<long> soliton_content(const PbbsState& s) {
    if (2 * s.ball_count() >= s.size()) throw std::domain_error("overfull periodic state");
    // Iterated cyclic 10-elimination. Round k removes p_k pairs; the p_k are
    // weakly decreasing and their conjugate partition is the soliton lengths.
    std::vector<uint8_t> cur = s.cells;
    std::vector<long> pair_counts;
    while (true) {
        const long n = static_cast<long>(cur.size());
        if (n == 0) break;
        std::vector<uint8_t> removed(n, 0);
        long cnt = 0;
        for (long i = 0; i < n; ++i) {
            long j = (i + 1) % n;
            if (cur[i] == 1 && cur[j] == 0 && !removed[i] && !removed[j]) {
                removed[i] = removed[j] = 1;
                ++cnt;
            }
        }
        if (cnt == 0) break;
        pair_counts.push_back(cnt);
        std::vector<uint8_t> next;
        next.reserve(n - 2 * cnt);
        for (long i = 0; i < n; ++i)
            if (!removed[i]) next.push_back(cur[i]);
        cur = std::move(next);
    }
    std::vector<long> lengths;
    for (std::size_t k = 0; k < pair_counts.size(); ++k) {
        long next = k + 1 < pair_counts.size() ? pair_counts[k + 1] : 0;
        for (long r = 0; r < pair_counts[k] - next; ++r)
            lengths.push_back(static_cast<long>(k) + 1);
    }
    std::sort(lengths.begin(), lengths.end());
    return lengths;
}

PbbsState append_vacuum(const PbbsState& s, long m) {
    PbbsState out = s;
    out.cells.insert(out.cells.end(), static_cast<std::size_t>(m), 0);
    return out;
}

bool bbs_evolution_holds(const BbsState& cur, const BbsState& next) {
    if (cur.ball_count() != next.ball_count()) return false;
    BbsState stepped = bbs_step(cur);
    long lo = std::min(stepped.offset, next.offset) - 1;
    long hi = std::max(stepped.offset + static_cast<long>(stepped.cells.size()),
                       next.offset + static_cast<long>(next.cells.size())) +
              1;
    for (long n = lo; n < hi; ++n)
        if (stepped.at(n) != next.at(n)) return false;
    return true;
}

}  // namespace tropbbs
