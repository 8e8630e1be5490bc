#ifndef GWALK_LINEWALK_HPP
#define GWALK_LINEWALK_HPP

#include "gwalk/exact.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace gwalk {

enum class Chirality : std::uint8_t { L = 0, R = 1 };
enum class Phase : std::uint8_t { Zero, Pi, Empty };

inline char phase_char(Phase p) {
    switch (p) {
        case Phase::Zero: return '#';
        case Phase::Pi: return 'o';
        default: return '.';
    }
}

/// Side-dependent 2x2 coin: diagonal 2*sqrt(k-1)/k, off-diagonals
/// -(1-2/k) / +(1-2/k) on the non-negative side and swapped on the
/// negative side. Rows are (L, R).
struct Coin {
    ExtScalar ll, lr, rl, rr;
};
Coin coin(int k, bool nonneg_side);

/// Exact two-component walk state on the integer line, started from the
/// delta state at the origin with right chirality. Amplitudes live in
/// Q(sqrt(k-1)) and are identically zero outside the light cone |x| <= n
/// and on cells with x + n odd.
class WalkState {
public:
    static WalkState initial(int k);

    int k() const { return k_; }
    int step() const { return step_; }
    std::uint64_t radicand() const { return radicand_; }

    /// Amplitude at cell (x; c); exact zero outside the stored window.
    const ExtScalar& amp(int x, Chirality c) const;

    /// One application of the evolution operator.
    void advance();

    /// Exact squared norm (must be exactly 1 at every step).
    ExtScalar norm_squared() const;

    /// Exact per-cell sign classification at the current step, for
    /// x in [-step, step].
    std::vector<Phase> phase_row() const;
    Phase phase_at(int x, Chirality c) const;

private:
    WalkState(int k, std::uint64_t radicand) : k_(k), radicand_(radicand) {}
    std::size_t index(int x, Chirality c) const;

    int k_ = 2;
    std::uint64_t radicand_ = 1;
    int step_ = 0;
    int capacity_ = 0;                // window half-width
    ExtScalar zero_;                  // exact zero in this walk's field
    std::vector<ExtScalar> amps_;     // (2*capacity_+1) cells x 2 chiralities
};

/// n applications of the evolution to the initial state.
WalkState evolve(int k, int n);

/// Phase rows for n = 1..n_max (k >= 3: the degenerate k = 2 coin never
/// reflects and yields no pattern).
class PhaseGrid {
public:
    PhaseGrid(int k, int n_max) : k_(k), n_max_(n_max) {}

    int k() const { return k_; }
    int n_max() const { return n_max_; }

    void push_row(std::vector<Phase> row) { rows_.push_back(std::move(row)); }
    /// Phase of cell (x; c) at step n (1-based n).
    Phase at(int n, int x, Chirality c) const;

    /// One text line per step; per position x the pair (x;L)(x;R), x
    /// running from -n_max to n_max. '#' zero phase, 'o' pi, '.' empty.
    std::string to_ascii() const;
    /// Header n,x,chirality,phase; one record per light-cone cell.
    std::string to_csv() const;
    /// Binary PGM (P5), one pixel per cell in the ascii layout; zero-phase
    /// cells are black, everything else white.
    std::string to_pgm() const;

private:
    int k_;
    int n_max_;
    std::vector<std::vector<Phase>> rows_;  // rows_[n-1], width 2*(2*n_max+1)
};

PhaseGrid pattern(int k, int n_max);

} // namespace gwalk

#endif
