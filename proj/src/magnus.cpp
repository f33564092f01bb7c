#include "vk4/magnus.hpp"

#include <cstdlib>
#include <stdexcept>

namespace vk4 {

Monomial Monomial::from_string(const std::string& s) {
    Monomial m;
    for (char c : s) {
        if (c != '1' && c != '2') throw std::invalid_argument("monomial symbols are 1 or 2");
        m.symbols.push_back(static_cast<uint8_t>(c - '0'));
    }
    return m;
}

Monomial Monomial::concat(const Monomial& rhs) const {
    Monomial m = *this;
    m.symbols.insert(m.symbols.end(), rhs.symbols.begin(), rhs.symbols.end());
    return m;
}

std::string Monomial::str() const {
    if (symbols.empty()) return "1";
    std::string s;
    for (uint8_t x : symbols) {
        s += 'X';
        s += static_cast<char>('0' + x);
    }
    return s;
}

MagnusSeries MagnusSeries::one(int max_degree) {
    MagnusSeries s(max_degree);
    s.terms_[Monomial::empty()] = 1;
    return s;
}

MagnusSeries MagnusSeries::letter(Letter l, int max_degree) {
    if (l == 0 || l < -2 || l > 2) throw std::invalid_argument("bad letter code");
    MagnusSeries s(max_degree);
    const uint8_t var = (std::abs(l) == 1) ? 1 : 2;
    if (l > 0) {
        s.terms_[Monomial::empty()] = 1;
        if (max_degree >= 1) {
            Monomial m;
            m.symbols.push_back(var);
            s.terms_[m] = 1;
        }
    } else {
        // Alternating geometric series, truncated.
        Monomial m;
        int sign = 1;
        for (int d = 0; d <= max_degree; ++d) {
            s.terms_[m] = sign;
            sign = -sign;
            m.symbols.push_back(var);
        }
    }
    return s;
}

Int MagnusSeries::coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Int(0) : it->second;
}

void MagnusSeries::set_coeff(const Monomial& m, const Int& v) {
    if (v == 0)
        terms_.erase(m);
    else
        terms_[m] = v;
}

MagnusSeries MagnusSeries::mul(const MagnusSeries& rhs) const {
    MagnusSeries out(max_degree_);
    for (const auto& [ma, ca] : terms_) {
        if (static_cast<int>(ma.degree()) > max_degree_) continue;
        for (const auto& [mb, cb] : rhs.terms_) {
            if (static_cast<int>(ma.degree() + mb.degree()) > max_degree_) continue;
            Monomial m = ma.concat(mb);
            auto it = out.terms_.find(m);
            if (it == out.terms_.end()) {
                Int v = ca * cb;
                if (v != 0) out.terms_.emplace(std::move(m), std::move(v));
            } else {
                it->second += ca * cb;
                if (it->second == 0) out.terms_.erase(it);
            }
        }
    }
    return out;
}

std::optional<int> MagnusSeries::min_positive_degree() const {
    for (const auto& [m, c] : terms_) {
        if (m.degree() >= 1) return static_cast<int>(m.degree());  // map is length-lex ordered
    }
    return std::nullopt;
}

std::string MagnusSeries::str() const {
    if (terms_.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        Int abs_c = abs(c);
        if (first) {
            if (c < 0) s += "-";
            first = false;
        } else {
            s += (c < 0) ? " - " : " + ";
        }
        if (m.degree() == 0) {
            s += abs_c.get_str();
        } else {
            if (abs_c != 1) s += abs_c.get_str() + " ";
            s += m.str();
        }
    }
    return s;
}

MagnusSeries magnus_expansion(const Word& w, int max_degree) {
    if (max_degree < 1) throw std::invalid_argument("max_degree must be >= 1");
    MagnusSeries s = MagnusSeries::one(max_degree);
    for (Letter l : w.letters()) s = s.mul(MagnusSeries::letter(l, max_degree));
    return s;
}

LcsDepth lcs_depth(const Word& w, int probe_degree) {
    if (probe_degree < 1) throw std::invalid_argument("probe_degree must be >= 1");
    LcsDepth d;
    if (w.is_identity()) {
        d.bound = probe_degree + 1;
        d.exact = false;
        return d;
    }
    auto md = magnus_expansion(w, probe_degree).min_positive_degree();
    if (md) {
        d.bound = *md;
        d.exact = true;
    } else {
        d.bound = probe_degree + 1;
        d.exact = false;
    }
    return d;
}

WordInvariants milnor_invariants(const Word& w, int lcs_probe) {
    WordInvariants inv;
    auto [ea, eb] = exponent_sums(w);
    inv.exp_a = ea;
    inv.exp_b = eb;
    inv.lcs_probe = lcs_probe;
    inv.lcs = lcs_depth(w, lcs_probe);
    if (ea == 0 && eb == 0) {
        const int deg = std::max(2, lcs_probe);
        inv.mu12 = magnus_expansion(w, deg).coeff(Monomial::from_string("12"));
    }
    return inv;
}

UnlinkDecision unlink_criterion(const Word& w) {
    WordInvariants inv = milnor_invariants(w);
    UnlinkDecision d;
    d.reasons.push_back("Lk(g1,g2) = 0 (structural: curves lie in disjoint balls)");
    d.reasons.push_back("Lk(g3,g1) = exp_a = " + std::to_string(inv.exp_a) +
                        (inv.exp_a == 0 ? " (pass)" : " (fail)"));
    d.reasons.push_back("Lk(g3,g2) = exp_b = " + std::to_string(inv.exp_b) +
                        (inv.exp_b == 0 ? " (pass)" : " (fail)"));
    if (inv.mu12) {
        d.reasons.push_back("mu(123) = " + inv.mu12->get_str() +
                            (*inv.mu12 == 0 ? " (pass)" : " (fail)"));
        d.pass = inv.exp_a == 0 && inv.exp_b == 0 && *inv.mu12 == 0;
    } else {
        d.reasons.push_back("mu(123) undefined (nonzero exponent sums)");
        d.pass = false;
    }
    return d;
}

}  // namespace vk4
