#include "cfevt/numerics/source.hpp"

#include <cctype>
#include <string>

#include "cfevt/errors.hpp"
#include "cfevt/numerics/adaptive.hpp"

namespace cfevt {
namespace {

std::string trim(std::string_view s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

mpz_class pow10(unsigned long k) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), 10, k);
  return r;
}

bool is_named(std::string_view name) {
  return name == "pi" || name == "sqrt2" || name == "golden" || name == "e";
}

}  // namespace

mpq_class parse_exact_rational(std::string_view text) {
  const std::string s = trim(text);
  const auto fail = [&] { return InvalidArgument("not an exact rational literal: '" + s + "'"); };
  if (s.empty()) throw fail();

  if (const auto slash = s.find('/'); slash != std::string::npos) {
    mpq_class num = parse_exact_rational(s.substr(0, slash));
    mpq_class den = parse_exact_rational(s.substr(slash + 1));
    if (den == 0) throw InvalidArgument("zero denominator in '" + s + "'");
    mpq_class q = num / den;
    q.canonicalize();
    return q;
  }

  std::size_t i = 0;
  bool negative = false;
  if (s[i] == '+' || s[i] == '-') negative = s[i++] == '-';
  std::string digits;
  long frac_digits = 0;
  bool seen_point = false;
  for (; i < s.size(); ++i) {
    const char c = s[i];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      digits.push_back(c);
      if (seen_point) ++frac_digits;
    } else if (c == '.' && !seen_point) {
      seen_point = true;
    } else {
      break;
    }
  }
  if (digits.empty()) throw fail();
  long exponent = 0;
  if (i < s.size()) {
    if (s[i] != 'e' && s[i] != 'E') throw fail();
    const std::string exp_text = s.substr(i + 1);
    std::size_t used = 0;
    try {
      exponent = std::stol(exp_text, &used);
    } catch (const std::exception&) {
      throw fail();
    }
    if (used != exp_text.size()) throw fail();
  }

  mpz_class mant(digits, 10);
  if (negative) mant = -mant;
  const long shift = exponent - frac_digits;
  mpq_class q;
  if (shift >= 0) {
    q = mant * pow10(static_cast<unsigned long>(shift));
  } else {
    q = mpq_class(mant, pow10(static_cast<unsigned long>(-shift)));
    q.canonicalize();
  }
  return q;
}

RealSource RealSource::exact(mpq_class value) {
  value.canonicalize();
  const std::string label = value.get_str();
  return RealSource([value](std::size_t) { return value; }, true, label);
}

RealSource RealSource::from_evaluator(Evaluator f, std::string label) {
  return RealSource(std::move(f), false, std::move(label));
}

RealSource RealSource::named(std::string_view name) {
  const std::string n(name);
  if (n == "pi") {
    return from_evaluator([](std::size_t b) { return AdaptiveReal::pi(b).to_rational(); }, n);
  }
  if (n == "sqrt2") {
    return from_evaluator([](std::size_t b) { return AdaptiveReal::sqrt2(b).to_rational(); }, n);
  }
  if (n == "golden") {
    return from_evaluator([](std::size_t b) { return AdaptiveReal::golden(b).to_rational(); }, n);
  }
  if (n == "e") {
    return from_evaluator(
        [](std::size_t b) {
          AdaptiveReal r(b);
          mpfr_set_ui(r.get(), 1, MPFR_RNDN);
          mpfr_exp(r.get(), r.get(), MPFR_RNDN);
          return r.to_rational();
        },
        n);
  }
  throw InvalidArgument("unknown named constant '" + n + "' (expected pi, sqrt2, golden, e)");
}

RealSource RealSource::uniform(RandomStream stream) {
  return from_evaluator(
      [stream](std::size_t b) { return sample_uniform_unit_rational(stream, b); },
      "uniform(seed=" + std::to_string(stream.seed) + ",index=" + std::to_string(stream.index) + ")");
}

RealSource RealSource::parse(std::string_view text) {
  const std::string s = trim(text);
  if (is_named(s)) return named(s);
  if (!s.empty() && s[0] == '-' && is_named(s.substr(1))) {
    const RealSource inner = named(s.substr(1));
    return from_evaluator([inner](std::size_t b) { return mpq_class(-inner.at(b)); }, s);
  }
  return exact(parse_exact_rational(s));
}

RealSource RealSource::offset(const mpq_class& delta) const {
  const Evaluator f = eval_;
  RealSource r([f, delta](std::size_t b) { return mpq_class(f(b) + delta); }, exact_,
               label_ + (delta >= 0 ? "+" : "") + delta.get_str());
  return r;
}

ComplexSource ComplexSource::exact(mpq_class re, mpq_class im) {
  re.canonicalize();
  im.canonicalize();
  const std::string label = re.get_str() + "," + im.get_str();
  return ComplexSource([re, im](std::size_t) { return ComplexRational{re, im}; }, true, label);
}

ComplexSource ComplexSource::from_parts(RealSource re, RealSource im) {
  const bool exact = re.is_exact() && im.is_exact();
  const std::string label = re.label() + "," + im.label();
  return ComplexSource(
      [re = std::move(re), im = std::move(im)](std::size_t b) {
        return ComplexRational{re.at(b), im.at(b)};
      },
      exact, label);
}

ComplexSource ComplexSource::from_evaluator(Evaluator f, std::string label) {
  return ComplexSource(std::move(f), false, std::move(label));
}

ComplexSource ComplexSource::uniform_box(RandomStream stream) {
  return from_evaluator(
      [stream](std::size_t b) {
        if (b < kMinSampleBits) throw InvalidArgument("sampling needs at least 53 bits");
        auto re_engine = stream.lane(kBoxReLane);
        auto im_engine = stream.lane(kBoxImLane);
        const mpq_class half(1, 2);
        return ComplexRational{draw_unit_rational(re_engine, b) - half,
                               draw_unit_rational(im_engine, b) - half};
      },
      "uniform_box(seed=" + std::to_string(stream.seed) + ",index=" + std::to_string(stream.index) +
          ")");
}

ComplexSource ComplexSource::parse(std::string_view text) {
  const std::string s = trim(text);
  if (const auto comma = s.find(','); comma != std::string::npos) {
    return from_parts(RealSource::parse(s.substr(0, comma)), RealSource::parse(s.substr(comma + 1)));
  }
  if (s.empty() || s.back() != 'i') {
    return from_parts(RealSource::parse(s), RealSource::exact(0));
  }
  const std::string body = s.substr(0, s.size() - 1);
  // Split at the last sign that is not a leading sign or an exponent sign.
  std::size_t split = std::string::npos;
  for (std::size_t k = body.size(); k-- > 1;) {
    if ((body[k] == '+' || body[k] == '-') && body[k - 1] != 'e' && body[k - 1] != 'E') {
      split = k;
      break;
    }
  }
  const std::string re_text = split == std::string::npos ? "0" : body.substr(0, split);
  std::string im_text = split == std::string::npos ? body : body.substr(split);
  if (im_text.empty() || im_text == "+") im_text = "1";
  if (im_text == "-") im_text = "-1";
  if (im_text[0] == '+') im_text.erase(0, 1);
  return from_parts(RealSource::parse(re_text), RealSource::parse(im_text));
}

}  // namespace cfevt
