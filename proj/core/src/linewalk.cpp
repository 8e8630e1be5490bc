#include "gwalk/linewalk.hpp"
#include "gwalk/errors.hpp"

#include <sstream>

namespace gwalk {

Coin coin(int k, bool nonneg_side) {
    if (k < 2)
        throw PreconditionError("coin requires k >= 2");
    const std::uint64_t radicand = static_cast<std::uint64_t>(k - 1);
    const ExtScalar diag(Rational(0), Rational(2, k), radicand);
    const ExtScalar refl = ExtScalar::rational(Rational(k - 2, k), radicand);
    // Non-negative side: [[diag, -refl], [refl, diag]]; negative side has
    // the off-diagonal signs swapped.
    if (nonneg_side)
        return Coin{diag, -refl, refl, diag};
    return Coin{diag, refl, -refl, diag};
}

WalkState WalkState::initial(int k) {
    if (k < 2)
        throw PreconditionError("walk requires k >= 2");
    WalkState s(k, static_cast<std::uint64_t>(k - 1));
    s.capacity_ = 0;
    s.zero_ = ExtScalar::rational(Rational(0), s.radicand_);
    s.amps_.assign(2, s.zero_);
    s.amps_[s.index(0, Chirality::R)] = ExtScalar::rational(Rational(1), s.radicand_);
    return s;
}

std::size_t WalkState::index(int x, Chirality c) const {
    return static_cast<std::size_t>(x + capacity_) * 2 + static_cast<std::size_t>(c);
}

const ExtScalar& WalkState::amp(int x, Chirality c) const {
    if (x < -capacity_ || x > capacity_)
        return zero_;
    return amps_[index(x, c)];
}

void WalkState::advance() {
    const Coin pos = coin(k_, true);
    const Coin neg = coin(k_, false);
    const ExtScalar zero = ExtScalar::rational(Rational(0), radicand_);

    const int new_cap = capacity_ + 1;
    std::vector<ExtScalar> next(static_cast<std::size_t>(2 * new_cap + 1) * 2, zero);

    auto old_amp = [&](int x, Chirality c) -> const ExtScalar& {
        if (x < -capacity_ || x > capacity_)
            return zero;
        return amps_[index(x, c)];
    };

    for (int x = -new_cap; x <= new_cap; ++x) {
        const std::size_t base = static_cast<std::size_t>(x + new_cap) * 2;
        // L component: coin at x+1 feeds leftwards.
        {
            const int src = x + 1;
            const ExtScalar& l = old_amp(src, Chirality::L);
            const ExtScalar& r = old_amp(src, Chirality::R);
            if (!(l.is_zero() && r.is_zero())) {
                const Coin& c = src >= 0 ? pos : neg;
                next[base + 0] = c.ll * l + c.lr * r;
            }
        }
        // R component: coin at x-1 feeds rightwards.
        {
            const int src = x - 1;
            const ExtScalar& l = old_amp(src, Chirality::L);
            const ExtScalar& r = old_amp(src, Chirality::R);
            if (!(l.is_zero() && r.is_zero())) {
                const Coin& c = src >= 0 ? pos : neg;
                next[base + 1] = c.rl * l + c.rr * r;
            }
        }
    }
    amps_ = std::move(next);
    capacity_ = new_cap;
    ++step_;
}

ExtScalar WalkState::norm_squared() const {
    ExtScalar total = ExtScalar::rational(Rational(0), radicand_);
    for (const ExtScalar& a : amps_)
        total += a * a;
    return total;
}

Phase WalkState::phase_at(int x, Chirality c) const {
    if (x < -capacity_ || x > capacity_)
        return Phase::Empty;
    const int s = amps_[index(x, c)].sign();
    if (s > 0)
        return Phase::Zero;
    if (s < 0)
        return Phase::Pi;
    return Phase::Empty;
}

std::vector<Phase> WalkState::phase_row() const {
    std::vector<Phase> row;
    row.reserve(static_cast<std::size_t>(2 * step_ + 1) * 2);
    for (int x = -step_; x <= step_; ++x) {
        row.push_back(phase_at(x, Chirality::L));
        row.push_back(phase_at(x, Chirality::R));
    }
    return row;
}

WalkState evolve(int k, int n) {
    if (n < 0)
        throw PreconditionError("step count must be >= 0");
    WalkState s = WalkState::initial(k);
    for (int i = 0; i < n; ++i)
        s.advance();
    return s;
}

Phase PhaseGrid::at(int n, int x, Chirality c) const {
    if (n < 1 || n > static_cast<int>(rows_.size()) || x < -n_max_ || x > n_max_)
        return Phase::Empty;
    const std::size_t col = static_cast<std::size_t>(x + n_max_) * 2 + static_cast<std::size_t>(c);
    return rows_[static_cast<std::size_t>(n - 1)][col];
}

std::string PhaseGrid::to_ascii() const {
    std::ostringstream out;
    for (const auto& row : rows_) {
        for (Phase p : row)
            out << phase_char(p);
        out << '\n';
    }
    return out.str();
}

std::string PhaseGrid::to_csv() const {
    std::ostringstream out;
    out << "n,x,chirality,phase\n";
    for (int n = 1; n <= static_cast<int>(rows_.size()); ++n) {
        for (int x = -n; x <= n; ++x) {
            for (Chirality c : {Chirality::L, Chirality::R}) {
                const Phase p = at(n, x, c);
                out << n << ',' << x << ',' << (c == Chirality::L ? 'L' : 'R') << ',';
                switch (p) {
                    case Phase::Zero: out << "zero"; break;
                    case Phase::Pi: out << "pi"; break;
                    default: out << "empty"; break;
                }
                out << '\n';
            }
        }
    }
    return out.str();
}

std::string PhaseGrid::to_pgm() const {
    const int width = 2 * (2 * n_max_ + 1);
    const int height = static_cast<int>(rows_.size());
    std::ostringstream out;
    out << "P5\n" << width << ' ' << height << "\n255\n";
    for (const auto& row : rows_)
        for (Phase p : row)
            out.put(p == Phase::Zero ? '\0' : static_cast<char>(0xFF));
    return out.str();
}

PhaseGrid pattern(int k, int n_max) {
    if (k < 3)
        throw PreconditionError("phase pattern requires k >= 3");
    if (n_max < 1)
        throw PreconditionError("pattern needs at least one step");
    PhaseGrid grid(k, n_max);
    WalkState s = WalkState::initial(k);
    for (int n = 1; n <= n_max; ++n) {
        s.advance();
        std::vector<Phase> row(static_cast<std::size_t>(2 * n_max + 1) * 2, Phase::Empty);
        for (int x = -n; x <= n; ++x) {
            const std::size_t col = static_cast<std::size_t>(x + n_max) * 2;
            row[col + 0] = s.phase_at(x, Chirality::L);
            row[col + 1] = s.phase_at(x, Chirality::R);
        }
        grid.push_row(std::move(row));
    }
    return grid;
}

} // namespace gwalk
