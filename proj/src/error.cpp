#include <gsm/error.hpp>
#include <gsm/scalar.hpp>

#include <cctype>

namespace gsm {

std::string_view code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::CompDomain: return "E_COMP_DOMAIN";
    case ErrorCode::Assoc: return "E_ASSOC";
    case ErrorCode::Identity: return "E_IDENTITY";
    case ErrorCode::Inverse: return "E_INVERSE";
    case ErrorCode::Empty: return "E_EMPTY";
    case ErrorCode::NotGroup: return "E_NOT_GROUP";
    case ErrorCode::NoObject: return "E_NO_OBJECT";
    case ErrorCode::NotClosed: return "E_NOT_CLOSED";
    case ErrorCode::NotWide: return "E_NOT_WIDE";
    case ErrorCode::NotBijective: return "E_NOT_BIJECTIVE";
    case ErrorCode::IdentityAction: return "E_IDENTITY_ACTION";
    case ErrorCode::Cocycle: return "E_COCYCLE";
    case ErrorCode::NotSplit: return "E_NOT_SPLIT";
    case ErrorCode::NotInvariant: return "E_NOT_INVARIANT";
    case ErrorCode::NotCommuting: return "E_NOT_COMMUTING";
    case ErrorCode::NotSplitK: return "E_NOT_SPLIT_K";
    case ErrorCode::TooLarge: return "E_TOO_LARGE";
    case ErrorCode::Unit: return "E_UNIT";
    case ErrorCode::Grading: return "E_GRADING";
    case ErrorCode::UnitDecomp: return "E_UNIT_DECOMP";
    case ErrorCode::DimMismatch: return "E_DIM_MISMATCH";
    case ErrorCode::Module: return "E_MODULE";
    case ErrorCode::Malformed: return "E_MALFORMED";
    case ErrorCode::NotMultiplicative: return "E_NOT_MULTIPLICATIVE";
    case ErrorCode::NotMorphism: return "E_NOT_MORPHISM";
    case ErrorCode::NotIdeal: return "E_NOT_IDEAL";
    case ErrorCode::NotIso: return "E_NOT_ISO";
    case ErrorCode::NotUnitalDecomp: return "E_NOT_UNITAL_DECOMP";
    case ErrorCode::NoIdealUnit: return "E_NO_IDEAL_UNIT";
    case ErrorCode::NotEndo: return "E_NOT_ENDO";
    case ErrorCode::NotFullyFaithful: return "E_NOT_FULLY_FAITHFUL";
    case ErrorCode::NotTransitive: return "E_NOT_TRANSITIVE";
    case ErrorCode::XGrading: return "E_XGRADING";
    case ErrorCode::Syntax: return "E_SYNTAX";
    case ErrorCode::UnresolvedName: return "E_UNRESOLVED_NAME";
    case ErrorCode::DuplicateName: return "E_DUPLICATE_NAME";
  }
  return "E_UNKNOWN";
}

Rational parse_rational(const std::string& text) {
  size_t i = 0;
  bool negative = false;
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) negative = text[i++] == '-';
  auto digits = [&](size_t start) {
    size_t j = start;
    while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
    return j;
  };
  const size_t num_end = digits(i);
  if (num_end == i) throw std::invalid_argument("not a rational: '" + text + "'");
  Rational value(boost::multiprecision::mpz_int(text.substr(i, num_end - i)));
  if (num_end < text.size()) {
    if (text[num_end] != '/') throw std::invalid_argument("not a rational: '" + text + "'");
    const size_t den_end = digits(num_end + 1);
    if (den_end == num_end + 1 || den_end != text.size())
      throw std::invalid_argument("not a rational: '" + text + "'");
    boost::multiprecision::mpz_int den(text.substr(num_end + 1));
    if (den == 0) throw std::invalid_argument("zero denominator: '" + text + "'");
    value /= Rational(den);
  }
  return negative ? Rational(-value) : value;
}

}  // namespace gsm
