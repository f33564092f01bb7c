#ifndef VK4_MAGNUS_HPP
#define VK4_MAGNUS_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "vk4/exact.hpp"
#include "vk4/words.hpp"

namespace vk4 {

// A non-commutative monomial in X1, X2: a sequence over {1,2}.
// Ordered length-lexicographically with 1 < 2, which fixes the
// canonical printing order of series.
struct Monomial {
    std::vector<uint8_t> symbols;  // entries 1 or 2

    static Monomial empty() { return {}; }
    static Monomial from_string(const std::string& s);
    size_t degree() const { return symbols.size(); }
    Monomial concat(const Monomial& rhs) const;
    std::string str() const;  // "X1X2" style; empty monomial prints "1"

    bool operator==(const Monomial& rhs) const { return symbols == rhs.symbols; }
    bool operator<(const Monomial& rhs) const {
        if (symbols.size() != rhs.symbols.size()) return symbols.size() < rhs.symbols.size();
        return symbols < rhs.symbols;
    }
};

// Truncated integer power series in X1, X2. Zero coefficients are never
// stored. For a series arising from a group element the empty-monomial
// coefficient is exactly 1.
class MagnusSeries {
  public:
    explicit MagnusSeries(int max_degree) : max_degree_(max_degree) {}

    static MagnusSeries one(int max_degree);
    // Image of a single letter: a -> 1 + X1, a^{-1} -> 1 - X1 + X1^2 - ...
    // truncated at max_degree; likewise b with X2.
    static MagnusSeries letter(Letter l, int max_degree);

    int max_degree() const { return max_degree_; }
    const std::map<Monomial, Int>& terms() const { return terms_; }
    Int coeff(const Monomial& m) const;
    void set_coeff(const Monomial& m, const Int& v);

    // Truncated product; coefficients beyond max_degree are dropped.
    MagnusSeries mul(const MagnusSeries& rhs) const;

    // Lowest degree >= 1 with a nonzero coefficient, if any.
    std::optional<int> min_positive_degree() const;

    // Canonical text, terms in length-lex order: "1 + X1X2 - X2X1".
    std::string str() const;

    bool operator==(const MagnusSeries& rhs) const {
        return max_degree_ == rhs.max_degree_ && terms_ == rhs.terms_;
    }

  private:
    int max_degree_;
    std::map<Monomial, Int> terms_;
};

MagnusSeries magnus_expansion(const Word& w, int max_degree);

// Result of probing the lower central series: when exact, the word lies
// in gamma_bound but not gamma_{bound+1}; otherwise every Magnus term of
// degree <= probe vanished and the depth is >= bound (= probe + 1).
struct LcsDepth {
    int bound = 1;
    bool exact = true;
    std::string str() const { return exact ? std::to_string(bound) : ">=" + std::to_string(bound); }
};

LcsDepth lcs_depth(const Word& w, int probe_degree);

// The word-level link invariants used throughout: exponent sums are the
// linking numbers Lk(g3,g1), Lk(g3,g2) of the word-reading curve with the
// two cell boundaries, and mu12 (the X1X2 Magnus coefficient) is the
// triple linking invariant mu(123), defined only when both sums vanish.
struct WordInvariants {
    long long exp_a = 0;
    long long exp_b = 0;
    LcsDepth lcs;
    int lcs_probe = 3;
    std::optional<Int> mu12;
};

WordInvariants milnor_invariants(const Word& w, int lcs_probe = 3);

// Milnor's unlink criterion for the three proof curves: all pairwise
// linking numbers and the triple invariant must vanish. Lk(g1,g2) = 0
// holds structurally (the two triangle curves sit in disjoint balls).
struct UnlinkDecision {
    bool pass = false;
    std::vector<std::string> reasons;
};

UnlinkDecision unlink_criterion(const Word& w);

}  // namespace vk4

#endif
