// Harish-Chandra series of the principal Phi_h-blocks of the exceptional
// groups whose planar embedding is determined by the walk argument. Series
// are listed counterclockwise around the exceptional vertex, starting from the
// principal series (Steinberg ... trivial).
//
// Label transliteration: theta, eps, phi, eta, zeta spelled out; '' for a
// double prime; ^2F_4 / ^2B_2 for twisted types.

#include <charconv>
#include <regex>

#include "brauer/coxeter.hpp"
#include "brauer/error.hpp"

namespace brauer {

namespace {

HCSeries series(std::string zeta, std::string conjugate, std::vector<std::string> characters) {
  return HCSeries{std::move(zeta), std::move(conjugate), std::move(characters)};
}

CoxeterBlockData type_2F4() {
  return {"2F4", 24, 2, 2, 1,
          {
              series("1", "1", {"St", "phi_{2,1}", "1"}),
              series("-theta^2", "-theta", {"^2F_4[-theta^2]"}),
              series("i", "-i", {"^2F_4^II[i]"}),
              series("eta^3", "eta^5", {"^2B_2[eta^3]_eps", "^2B_2[eta^3]_1"}),
              series("-1", "-1", {"^2F_4^II[-1]"}),
              series("eta^5", "eta^3", {"^2B_2[eta^5]_eps", "^2B_2[eta^5]_1"}),
              series("-i", "i", {"^2F_4^II[-i]"}),
              series("-theta", "-theta^2", {"^2F_4[-theta]"}),
          }};
}

CoxeterBlockData type_F4() {
  return {"F4", 12, 1, 4, 1,
          {
              series("1", "1", {"St", "phi_{4,13}", "phi''_{6,6}", "phi_{4,1}", "1"}),
              series("i", "-i", {"F_4[i]"}),
              series("theta", "theta^2", {"F_4[theta]"}),
              series("-1", "-1", {"B_{2,eps}", "B_{2,r}", "B_{2,1}"}),
              series("theta^2", "theta", {"F_4[theta^2]"}),
              series("-i", "i", {"F_4[-i]"}),
          }};
}

CoxeterBlockData type_E7() {
  return {"E7", 18, 1, 7, 1,
          {
              series("1", "1",
                     {"St", "phi_{7,46}", "phi_{21,33}", "phi_{35,22}", "phi_{35,13}", "phi_{21,6}", "phi_{7,1}",
                      "1"}),
              series("i", "-i", {"E_7[i]"}),
              series("theta", "theta^2", {"E_6[theta]_eps", "E_6[theta]_1"}),
              series("-1", "-1", {"D_{4,eps}", "D_{4,r.eps}", "D_{4,r}", "D_{4,1}"}),
              series("theta^2", "theta", {"E_6[theta^2]_eps", "E_6[theta^2]_1"}),
              series("-i", "i", {"E_7[-i]"}),
          }};
}

CoxeterBlockData type_E8() {
  return {"E8", 30, 1, 8, 1,
          {
              series("1", "1",
                     {"St", "phi_{8,91}", "phi_{28,68}", "phi_{56,49}", "phi_{70,32}", "phi_{56,19}", "phi_{28,8}",
                      "phi_{8,1}", "1"}),
              series("-theta^2", "-theta", {"E_8[-theta^2]"}),
              series("zeta", "zeta^4", {"E_8[zeta]"}),
              series("i", "-i", {"E_7[i]_eps", "E_7[i]_1"}),
              series("theta", "theta^2", {"E_6[theta]_eps", "E_6[theta]_{phi_{2,1}}", "E_6[theta]_1"}),
              series("zeta^2", "zeta^3", {"E_8[zeta^2]"}),
              series("-1", "-1",
                     {"D_{4,eps}", "D_{4,phi_{4,13}}", "D_{4,phi''_{6,6}}", "D_{4,phi_{4,1}}", "D_{4,1}"}),
              series("zeta^3", "zeta^2", {"E_8[zeta^3]"}),
              series("theta^2", "theta", {"E_6[theta^2]_eps", "E_6[theta^2]_{phi_{2,1}}", "E_6[theta^2]_1"}),
              series("-i", "i", {"E_7[-i]_eps", "E_7[-i]_1"}),
              series("zeta^4", "zeta", {"E_8[zeta^4]"}),
              series("-theta", "-theta^2", {"E_8[-theta]"}),
          }};
}

}  // namespace

std::vector<std::string> builtin_tags() { return {"2F4", "F4", "E7", "E8"}; }

CoxeterBlockData star_dataset(int e, int multiplicity) {
  if (e < 1) throw Error(ErrorCode::InvalidParameter, "star needs e >= 1");
  CoxeterBlockData data{"star(" + std::to_string(e) + "," + std::to_string(multiplicity) + ")", e, 1, 0,
                        multiplicity, {}};
  // chi_e is the trivial character; chi_j and chi_{e-j} are dual.
  data.series.push_back(series("1", "1", {"chi_" + std::to_string(e)}));
  for (int j = 1; j < e; ++j) {
    data.series.push_back(
        series("zeta^" + std::to_string(j), "zeta^" + std::to_string(e - j), {"chi_" + std::to_string(j)}));
  }
  return validate_dataset(std::move(data));
}

CoxeterBlockData builtin_dataset(std::string_view tag) {
  if (tag == "2F4") return validate_dataset(type_2F4());
  if (tag == "F4") return validate_dataset(type_F4());
  if (tag == "E7") return validate_dataset(type_E7());
  if (tag == "E8") return validate_dataset(type_E8());

  static const std::regex star_tag(R"(star\((\d+),(\d+)\))");
  std::match_results<std::string_view::const_iterator> match;
  if (std::regex_match(tag.begin(), tag.end(), match, star_tag)) {
    int e = 0;
    int m = 0;
    const auto parse = [](const auto& sub, int& out) {
      return std::from_chars(&*sub.first, &*sub.first + sub.length(), out).ec == std::errc{};
    };
    if (parse(match[1], e) && parse(match[2], m)) return star_dataset(e, m);
  }
  throw Error(ErrorCode::UnknownGroup, "unknown group '" + std::string(tag) + "'");
}

}  // namespace brauer
