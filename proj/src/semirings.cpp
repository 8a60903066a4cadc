#include "semiid/semirings.hpp"

#include <cctype>

namespace semiid {

  std::string to_string(BigRational const& q) {
    auto const num = boost::multiprecision::numerator(q);
    auto const den = boost::multiprecision::denominator(q);
    if (den == 1) {
      return num.str();
    }
    return num.str() + "/" + den.str();
  }

  namespace {
    bool is_integer_text(std::string const& text, bool allow_sign) {
      std::size_t i = 0;
      if (allow_sign && i < text.size() && (text[i] == '-' || text[i] == '+')) {
        ++i;
      }
      if (i == text.size()) {
        return false;
      }
      for (; i < text.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(text[i]))) {
          return false;
        }
      }
      return true;
    }

    [[noreturn]] void bad_value(std::string const& text,
                                std::string const& where) {
      throw ParseError("cannot parse '" + text + "' as an element of "
                       + where);
    }

    ExtendedRational parse_extended(std::string const& text,
                                    std::string const& where) {
      if (text == "inf" || text == "+inf") {
        return ExtendedRational::positive_infinity();
      }
      if (text == "-inf") {
        return ExtendedRational::negative_infinity();
      }
      try {
        return ExtendedRational::finite(parse_rational(text));
      } catch (ParseError const&) {
        bad_value(text, where);
      }
    }

    std::string format_extended(ExtendedRational const& a) {
      switch (a.kind) {
        case ExtendedRational::Kind::negative_infinity:
          return "-inf";
        case ExtendedRational::Kind::positive_infinity:
          return "inf";
        case ExtendedRational::Kind::finite:
          break;
      }
      return to_string(a.value);
    }

    // p/q with q in denominators and p/q in [lo, hi].
    BigRational draw_rational(Rng&                              rng,
                              std::vector<std::int64_t> const& denominators,
                              std::int64_t                      lo,
                              std::int64_t                      hi) {
      auto const q = denominators[draw_below(rng, denominators.size())];
      auto const span
          = static_cast<std::uint64_t>((hi - lo) * q + 1);
      auto const p = lo * q + static_cast<std::int64_t>(draw_below(rng, span));
      return BigRational(p, q);
    }
  }  // namespace

  BigRational parse_rational(std::string const& text) {
    auto const slash = text.find('/');
    if (slash == std::string::npos) {
      if (!is_integer_text(text, true)) {
        throw ParseError("malformed rational '" + text + "'");
      }
      return BigRational(BigInt(text));
    }
    auto const num = text.substr(0, slash);
    auto const den = text.substr(slash + 1);
    if (!is_integer_text(num, true) || !is_integer_text(den, false)
        || BigInt(den) == 0) {
      throw ParseError("malformed rational '" + text + "'");
    }
    return BigRational(BigInt(num), BigInt(den));
  }

  bool Boolean::parse(std::string const& text) const {
    if (text == "0") {
      return false;
    }
    if (text == "1") {
      return true;
    }
    bad_value(text, name());
  }

  Natural Naturals::parse(std::string const& text) const {
    if (!is_integer_text(text, false)) {
      bad_value(text, name());
    }
    return {BigInt(text)};
  }

  TruncatedNaturals::TruncatedNaturals(std::uint64_t index,
                                       std::uint64_t period)
      : _index(index), _period(period), _idempotent(true), _interval(true) {
    if (period == 0) {
      throw PreconditionError("nat:<index>,<period> needs period >= 1");
    }
    if (index + period > (std::uint64_t(1) << 20)) {
      throw PreconditionError("nat:<index>,<period> carrier too large");
    }
    for (std::uint64_t a = 0; a < size(); ++a) {
      if (add({a}, {a}).value != a) {
        _idempotent = false;
      }
      if (add({a}, one()) != one()) {
        _interval = false;
      }
    }
    _interval = _interval && _idempotent;
  }

  std::optional<std::vector<Residue>> TruncatedNaturals::elements() const {
    std::vector<Residue> out;
    out.reserve(size());
    for (std::uint64_t a = 0; a < size(); ++a) {
      out.push_back({a});
    }
    return out;
  }

  std::vector<Residue> TruncatedNaturals::default_scalars() const {
    if (!_interval) {
      return {};
    }
    std::vector<Residue> out{one()};
    for (std::uint64_t a = 0; a < size(); ++a) {
      if (Residue{a} != one() && Residue{a} != zero()) {
        out.push_back({a});
      }
    }
    return out;
  }

  Residue TruncatedNaturals::parse(std::string const& text) const {
    if (!is_integer_text(text, false)) {
      bad_value(text, name());
    }
    BigInt const m(text);
    if (m >= size()) {
      throw InstanceMismatch("value " + text + " is outside " + name());
    }
    return {static_cast<std::uint64_t>(m)};
  }

  ExtendedRational MaxPlus::sample(Rng& rng) const {
    if (draw_below(rng, 8) == 0) {
      return zero();
    }
    return ExtendedRational::finite(draw_rational(rng, {1, 2, 4}, -8, 8));
  }

  std::string MaxPlus::format(ExtendedRational const& a) const {
    return format_extended(a);
  }

  ExtendedRational MaxPlus::parse(std::string const& text) const {
    auto v = parse_extended(text, name());
    if (!contains(v)) {
      throw InstanceMismatch("value " + text + " is outside " + name());
    }
    return v;
  }

  ExtendedRational MinPlusInterval::sample(Rng& rng) const {
    if (draw_below(rng, 8) == 0) {
      return zero();
    }
    return ExtendedRational::finite(draw_rational(rng, {1, 2, 4}, 0, 8));
  }

  std::string MinPlusInterval::format(ExtendedRational const& a) const {
    return format_extended(a);
  }

  ExtendedRational MinPlusInterval::parse(std::string const& text) const {
    auto v = parse_extended(text, name());
    if (!contains(v)) {
      throw InstanceMismatch("value " + text + " is outside " + name());
    }
    return v;
  }

  ExtendedRational UnitInterval::sample(Rng& rng) const {
    return ExtendedRational::finite(
        draw_rational(rng, {1, 2, 3, 4, 5, 6, 7, 8}, 0, 1));
  }

  std::string UnitInterval::format(ExtendedRational const& a) const {
    return format_extended(a);
  }

  ExtendedRational UnitInterval::parse(std::string const& text) const {
    auto v = parse_extended(text, name());
    if (!contains(v)) {
      throw InstanceMismatch("value " + text + " is outside " + name());
    }
    return v;
  }

  std::string DiamondLattice::format(LatticeElement a) const {
    static char const* const names[] = {"0", "a", "b", "1"};
    if (a.bits >= 4) {
      throw InstanceMismatch("lattice element out of range");
    }
    return names[a.bits];
  }

  LatticeElement DiamondLattice::parse(std::string const& text) const {
    if (text == "0") {
      return {0b00};
    }
    if (text == "a") {
      return {0b01};
    }
    if (text == "b") {
      return {0b10};
    }
    if (text == "1") {
      return {0b11};
    }
    bad_value(text, name());
  }

}  // namespace semiid
