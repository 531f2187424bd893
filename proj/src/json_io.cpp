#include "isoact/json_io.hpp"

namespace isoact {

namespace {

Integer integer_from_json(const json& j) {
  if (j.is_number_integer()) return Integer(std::to_string(j.get<long long>()));
  if (j.is_number_unsigned()) return Integer(std::to_string(j.get<unsigned long long>()));
  if (j.is_string()) {
    Rational q = parse_rational(j.get<std::string>());
    if (q.get_den() != 1) fail(Errc::invalid_encoding, "expected an integer");
    return q.get_num();
  }
  fail(Errc::invalid_encoding, "expected an integer, got " + j.dump());
}

json integer_to_json(const Integer& z) {
  if (z.fits_slong_p()) return z.get_si();
  return z.get_str();
}

cplx complex_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    fail(Errc::invalid_encoding, "complex number must be [re, im]");
  return {j[0].get<double>(), j[1].get<double>()};
}

template <class Elem, class Less, class Dec>
FiniteMeasure<Elem, Less> decode_measure(const json& j, const std::string& group, Dec dec) {
  if (!j.is_array()) fail(Errc::invalid_encoding, "measure must be an array of atoms");
  std::vector<std::pair<Elem, Rational>> atoms;
  for (const auto& a : j) {
    if (!a.is_object() || !a.contains("elem") || !a.contains("num") || !a.contains("den"))
      fail(Errc::invalid_encoding, "atom needs elem, num, den");
    Integer num = integer_from_json(a["num"]), den = integer_from_json(a["den"]);
    if (den <= 0) fail(Errc::invalid_encoding, "denominator must be positive");
    Rational w(num, den);
    w.canonicalize();
    atoms.emplace_back(dec(a["elem"]), w);
  }
  return FiniteMeasure<Elem, Less>(group, atoms);
}

template <class M, class Enc>
json encode_measure(const M& m, Enc enc) {
  json out = json::array();
  for (const auto& [e, w] : m.atoms())
    out.push_back({{"elem", enc(e)}, {"num", integer_to_json(w.get_num())}, {"den", integer_to_json(w.get_den())}});
  return out;
}

}  // namespace

Rational rational_from_json(const json& j) {
  if (j.is_number_integer() || j.is_number_unsigned()) return Rational(integer_from_json(j));
  if (j.is_string()) return parse_rational(j.get<std::string>());
  fail(Errc::invalid_encoding, "expected an exact rational, got " + j.dump());
}

json rational_to_json(const Rational& q) {
  if (q.get_den() == 1) return integer_to_json(q.get_num());
  return q.get_str();
}

json encode(const SuMatrix& g) {
  return {{"a", {g.a().real(), g.a().imag()}}, {"b", {g.b().real(), g.b().imag()}}};
}

SuMatrix decode_su(const json& j) {
  if (!j.is_object() || !j.contains("a") || !j.contains("b")) fail(Errc::invalid_encoding, "SU(1,1) needs a and b");
  return SuMatrix::from_params(complex_from_json(j["a"]), complex_from_json(j["b"]));
}

json encode(const FreeWord& w) { return w.letters(); }

FreeWord decode_word(const json& j, int rank) {
  if (!j.is_array()) fail(Errc::invalid_encoding, "word must be an array of signed generator indices");
  std::vector<int> letters;
  for (const auto& x : j) {
    if (!x.is_number_integer()) fail(Errc::invalid_encoding, "letters must be integers");
    letters.push_back(x.get<int>());
  }
  return free_reduce(letters, rank);
}

json encode(const WordMeasure& m) {
  return encode_measure(m, [](const FreeWord& w) { return encode(w); });
}

json encode(const SuMeasure& m) {
  return encode_measure(m, [](const SuMatrix& g) { return encode(g); });
}

WordMeasure decode_word_measure(const json& j, int rank) {
  return decode_measure<FreeWord, std::less<FreeWord>>(j, "F" + std::to_string(rank),
                                                       [rank](const json& e) { return decode_word(e, rank); });
}

SuMeasure decode_su_measure(const json& j) {
  return decode_measure<SuMatrix, SuLess>(j, "SU(1,1)", [](const json& e) { return decode_su(e); });
}

}  // namespace isoact
