#ifndef VK4_WORDS_HPP
#define VK4_WORDS_HPP

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace vk4 {

// A letter of the free group F = <a,b>:
//   +1 = a, -1 = a^{-1}, +2 = b, -2 = b^{-1}.
using Letter = int;

struct WordParseError : std::runtime_error {
    WordParseError(size_t pos, const std::string& what)
        : std::runtime_error("parse error at position " + std::to_string(pos) + ": " + what),
          position(pos) {}
    size_t position;
};

// A freely reduced word in F. The empty word is the identity.
class Word {
  public:
    Word() = default;

    // Free reduction of a raw letter sequence; idempotent.
    static Word from_letters(const std::vector<Letter>& raw);

    // Grammar:  expr := term+ ; term := atom ('^' signed-int)? ;
    //           atom := 'a'|'b'|'A'|'B'|'1' | '[' expr ',' expr ']' | '(' expr ')'
    // Uppercase letters are inverses, whitespace is ignored, '1' is the
    // identity, and [x,y] denotes the commutator x y x^-1 y^-1. '^0' is
    // allowed and contributes the identity. Throws WordParseError on bad
    // input.
    static Word parse(const std::string& text);

    const std::vector<Letter>& letters() const { return letters_; }
    size_t size() const { return letters_.size(); }
    bool is_identity() const { return letters_.empty(); }

    Word inverse() const;
    Word operator*(const Word& rhs) const;
    Word pow(long long n) const;
    static Word commutator(const Word& x, const Word& y);

    // Canonical text: a, b, A, B concatenated without separators;
    // the identity prints as "1".
    std::string str() const;

    bool operator==(const Word& rhs) const { return letters_ == rhs.letters_; }
    bool operator!=(const Word& rhs) const { return letters_ != rhs.letters_; }

  private:
    std::vector<Letter> letters_;
};

// (sum of a-exponents, sum of b-exponents). Both vanish exactly when
// the word lies in the commutator subgroup [F,F].
std::pair<long long, long long> exponent_sums(const Word& w);

}  // namespace vk4

#endif
