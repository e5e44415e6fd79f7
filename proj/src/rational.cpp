#include "algf/rational.hpp"

#include "algf/error.hpp"

namespace algf {

Rational make_rational(std::int64_t num, std::int64_t den) {
  if (den == 0) {
    throw Error(ErrorCode::zero_parameter, "rational with zero denominator");
  }
  Rational q(mpz_class(std::to_string(num)), mpz_class(std::to_string(den)));
  q.canonicalize();
  return q;
}

Rational parse_rational(const std::string& text) {
  if (text.empty()) {
    throw Error(ErrorCode::syntax_error, "empty rational literal");
  }
  auto valid_integer = [](const std::string& s, bool allow_sign) {
    std::size_t i = 0;
    if (allow_sign && !s.empty() && (s[0] == '-' || s[0] == '+')) ++i;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i) {
      if (s[i] < '0' || s[i] > '9') return false;
    }
    return true;
  };
  const auto slash = text.find('/');
  const std::string num = text.substr(0, slash);
  const std::string den =
      slash == std::string::npos ? std::string("1") : text.substr(slash + 1);
  if (!valid_integer(num, true) || !valid_integer(den, false)) {
    throw Error(ErrorCode::syntax_error, "malformed rational '" + text + "'");
  }
  mpz_class n(num[0] == '+' ? num.substr(1) : num);
  mpz_class d(den);
  if (d == 0) {
    throw Error(ErrorCode::syntax_error, "zero denominator in '" + text + "'");
  }
  Rational q(n, d);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

std::optional<Rational> exact_sqrt(const Rational& q) {
  if (sgn(q) < 0) return std::nullopt;
  const mpz_class& num = q.get_num();
  const mpz_class& den = q.get_den();
  if (mpz_perfect_square_p(num.get_mpz_t()) == 0 ||
      mpz_perfect_square_p(den.get_mpz_t()) == 0) {
    return std::nullopt;
  }
  mpz_class root_num, root_den;
  mpz_sqrt(root_num.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(root_den.get_mpz_t(), den.get_mpz_t());
  Rational root(root_num, root_den);
  root.canonicalize();
  return root;
}

Rational random_nonzero_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(1, 9);
  std::uniform_int_distribution<int> den(1, 6);
  std::bernoulli_distribution negative(0.5);
  const int n = num(rng);
  const int d = den(rng);
  return make_rational(negative(rng) ? -n : n, d);
}

Rational random_positive_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(1, 9);
  std::uniform_int_distribution<int> den(1, 6);
  const int n = num(rng);
  const int d = den(rng);
  return make_rational(n, d);
}

}  // namespace algf
