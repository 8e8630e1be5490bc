#include "gwalk/structure.hpp"
#include "gwalk/errors.hpp"
#include "gwalk/walkops.hpp"

#include <json.hpp>

#include <sstream>

namespace gwalk {

StructureFormula::StructureFormula(int k, int n) : k_(k), n_(n) {
    if (k < 3)
        throw PreconditionError("structure formula requires k >= 3");
    if (n < 1)
        throw PreconditionError("structure formula requires n >= 1");
    eps_.assign(static_cast<std::size_t>(2 * n), 0);
    tau_.assign(static_cast<std::size_t>(2 * n), 0);
}

StructureFormula coefficients(int k, int n) {
    StructureFormula f(k, n);
    const WalkState state = evolve(k, n);
    for (int j = f.min_index(); j <= f.max_index(); ++j) {
        f.set_eps(j, state.phase_at(j, Chirality::R) == Phase::Zero);
        f.set_tau(j, state.phase_at(j - 1, Chirality::L) == Phase::Zero);
    }
    // Cells outside [-(n-1), n] cannot carry zero phase: the light cone
    // ends at |x| = n and the extremal cells are (n; R) positive and
    // (-n; L) negative.
    if (!f.eps(n))
        throw InvariantViolation("extremal cell (n; R) lost its positive sign");
    if (f.tau(-(n - 1)))
        throw InvariantViolation("extremal cell (-n; L) turned non-negative");
    return f;
}

IntMatrix assemble_rhs(const Graph& g, const StructureFormula& f) {
    const GraphReport report = analyze(g);
    if (!report.is_regular || *report.regularity_k != f.k())
        throw PreconditionError("graph is not " + std::to_string(f.k()) + "-regular");

    const int n = f.n();
    const IntMatrix s = positive_support(build_grover(g));
    const std::size_t dim = s.dim();

    IntMatrix sum(dim);
    IntMatrix power = IntMatrix::identity(dim);  // S(U)^j, ascending j
    for (int j = 0; j <= n; ++j) {
        if (j > 0)
            power = power * s;
        const bool use_fwd_eps = f.eps(j);
        const bool use_fwd_tau = f.tau(j);
        const bool use_rev_eps = j >= 1 && j <= n - 1 && f.eps(-j);
        const bool use_rev_tau = j >= 1 && j <= n - 1 && f.tau(-j);
        if (!(use_fwd_eps || use_fwd_tau || use_rev_eps || use_rev_tau))
            continue;
        const IntMatrix* transposed = nullptr;
        IntMatrix transposed_storage;
        if (use_rev_eps || use_rev_tau) {
            transposed_storage = power.transposed();
            transposed = &transposed_storage;
        }
        if (use_fwd_eps)
            sum = sum + power;
        if (use_fwd_tau)
            sum = sum + flip_J(power, FlipSide::Left);
        if (use_rev_eps)
            sum = sum + *transposed;
        if (use_rev_tau)
            sum = sum + flip_J(*transposed, FlipSide::Left);
    }

    const bool girth_ok = !report.girth || *report.girth > 2 * (n - 1);
    if (girth_ok && !sum.is_zero_one()) {
        throw InvariantViolation(
            "assembled support sum has an entry > 1 despite girth > 2(n-1); "
            "positional relations should be disjoint");
    }
    return sum;
}

VerificationReport verify(const Graph& g, int n) {
    if (n < 1)
        throw PreconditionError("power must be >= 1");
    const GraphReport report = analyze(g);
    if (!report.is_regular)
        throw PreconditionError("verification requires a regular graph");
    const int k = *report.regularity_k;
    if (k < 3)
        throw PreconditionError("verification requires regularity k >= 3, got k = " +
                                std::to_string(k));
    if (report.girth && *report.girth <= 2 * (n - 1))
        throw PreconditionError("girth too small: need > 2(n-1) = " + std::to_string(2 * (n - 1)) +
                                ", got " + std::to_string(*report.girth));

    VerificationReport out;
    out.n = n;
    out.k = k;
    out.girth = report.girth;

    const IntMatrix lhs = support_of_power(g, n);
    const IntMatrix rhs = assemble_rhs(g, coefficients(k, n));
    for (std::size_t b = 0; b < lhs.dim(); ++b)
        for (std::size_t a = 0; a < lhs.dim(); ++a)
            if (lhs.at(b, a) != rhs.at(b, a))
                out.mismatches.emplace_back(static_cast<int>(b), static_cast<int>(a));
    out.pass = out.mismatches.empty();
    return out;
}

std::string VerificationReport::to_json() const {
    nlohmann::ordered_json j;
    j["pass"] = pass;
    j["n"] = n;
    j["k"] = k;
    if (girth)
        j["girth"] = *girth;
    else
        j["girth"] = "infinity";
    auto& list = j["mismatches"] = nlohmann::ordered_json::array();
    for (const auto& [b, a] : mismatches)
        list.push_back({b, a});
    return j.dump(2);
}

namespace {

std::string power_token(const std::string& base, int power) {
    if (power == 0)
        return "I";
    if (power == 1)
        return base;
    return base + "^" + std::to_string(power);
}

std::string eps_term(int j) {
    if (j >= 0)
        return power_token("S(U)", j);
    return "^T " + power_token("S(U)", -j);
}

std::string tau_term(int j) {
    if (j == 0)
        return "J";
    return "J " + eps_term(j);
}

} // namespace

std::string pretty_print(const StructureFormula& f, FormulaFormat format) {
    if (format == FormulaFormat::Json) {
        nlohmann::ordered_json j;
        j["k"] = f.k();
        j["n"] = f.n();
        auto& eps = j["eps"] = nlohmann::ordered_json::object();
        auto& tau = j["tau"] = nlohmann::ordered_json::object();
        for (int i = f.min_index(); i <= f.max_index(); ++i) {
            eps[std::to_string(i)] = f.eps(i) ? 1 : 0;
            tau[std::to_string(i)] = f.tau(i) ? 1 : 0;
        }
        return j.dump(2);
    }
    // Cell order: position x ascending, R before L, which reproduces the
    // transpose-terms-first layout.
    std::ostringstream out;
    bool first = true;
    auto emit = [&](const std::string& term) {
        if (!first)
            out << " + ";
        out << term;
        first = false;
    };
    for (int x = -f.n(); x <= f.n(); ++x) {
        if (f.eps(x))
            emit(eps_term(x));
        if (f.tau(x + 1))
            emit(tau_term(x + 1));
    }
    if (first)
        out << "0";
    return out.str();
}

} // namespace gwalk
