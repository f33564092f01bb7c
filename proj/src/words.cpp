#include "vk4/words.hpp"

#include <cctype>
#include <cstdlib>

namespace vk4 {

Word Word::from_letters(const std::vector<Letter>& raw) {
    Word w;
    for (Letter l : raw) {
        if (l == 0 || l < -2 || l > 2) throw std::invalid_argument("bad letter code");
        if (!w.letters_.empty() && w.letters_.back() == -l)
            w.letters_.pop_back();
        else
            w.letters_.push_back(l);
    }
    return w;
}

Word Word::inverse() const {
    Word w;
    w.letters_.reserve(letters_.size());
    for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) w.letters_.push_back(-*it);
    return w;
}

Word Word::operator*(const Word& rhs) const {
    std::vector<Letter> cat = letters_;
    cat.insert(cat.end(), rhs.letters_.begin(), rhs.letters_.end());
    return from_letters(cat);
}

Word Word::pow(long long n) const {
    Word base = n < 0 ? inverse() : *this;
    if (n < 0) n = -n;
    Word out;
    for (long long i = 0; i < n; ++i) out = out * base;
    return out;
}

Word Word::commutator(const Word& x, const Word& y) {
    return x * y * x.inverse() * y.inverse();
}

std::string Word::str() const {
    if (letters_.empty()) return "1";
    std::string s;
    s.reserve(letters_.size());
    for (Letter l : letters_) {
        switch (l) {
            case 1: s += 'a'; break;
            case -1: s += 'A'; break;
            case 2: s += 'b'; break;
            case -2: s += 'B'; break;
        }
    }
    return s;
}

std::pair<long long, long long> exponent_sums(const Word& w) {
    long long ea = 0, eb = 0;
    for (Letter l : w.letters()) {
        if (l == 1) ++ea;
        else if (l == -1) --ea;
        else if (l == 2) ++eb;
        else --eb;
    }
    return {ea, eb};
}

namespace {

class Parser {
  public:
    explicit Parser(const std::string& text) : text_(text) {}

    Word run() {
        Word w = expr();
        skip_ws();
        if (pos_ != text_.size()) fail("unexpected character");
        return w;
    }

  private:
    const std::string& text_;
    size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& what) const { throw WordParseError(pos_, what); }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool at_atom_start() {
        skip_ws();
        if (pos_ >= text_.size()) return false;
        char c = text_[pos_];
        return c == 'a' || c == 'b' || c == 'A' || c == 'B' || c == '[' || c == '(' || c == '1';
    }

    Word expr() {
        skip_ws();
        if (!at_atom_start()) fail("expected a word");
        Word w;
        while (at_atom_start()) w = w * term();
        return w;
    }

    Word term() {
        Word base = atom();
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == '^') {
            ++pos_;
            return base.pow(signed_int());
        }
        return base;
    }

    Word atom() {
        skip_ws();
        if (pos_ >= text_.size()) fail("expected a letter, '1', '[' or '('");
        char c = text_[pos_];
        if (c == 'a' || c == 'b' || c == 'A' || c == 'B') {
            ++pos_;
            Letter l = (c == 'a') ? 1 : (c == 'A') ? -1 : (c == 'b') ? 2 : -2;
            return Word::from_letters({l});
        }
        if (c == '1') {  // the identity, so that canonical output re-parses
            ++pos_;
            return Word();
        }
        if (c == '[') {
            ++pos_;
            Word x = expr();
            skip_ws();
            if (pos_ >= text_.size() || text_[pos_] != ',') fail("expected ',' in commutator");
            ++pos_;
            Word y = expr();
            skip_ws();
            if (pos_ >= text_.size() || text_[pos_] != ']') fail("expected ']'");
            ++pos_;
            return Word::commutator(x, y);
        }
        if (c == '(') {
            ++pos_;
            Word w = expr();
            skip_ws();
            if (pos_ >= text_.size() || text_[pos_] != ')') fail("expected ')'");
            ++pos_;
            return w;
        }
        fail("expected a letter, '1', '[' or '('");
    }

    long long signed_int() {
        skip_ws();
        bool neg = false;
        if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) {
            neg = text_[pos_] == '-';
            ++pos_;
        }
        skip_ws();
        if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
            fail("expected an integer exponent");
        long long v = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            v = v * 10 + (text_[pos_] - '0');
            if (v > 1'000'000) fail("exponent too large");
            ++pos_;
        }
        return neg ? -v : v;
    }
};

}  // namespace

Word Word::parse(const std::string& text) {
    return Parser(text).run();
}

}  // namespace vk4
