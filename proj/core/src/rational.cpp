#include "cuspscan/rational.hpp"

namespace cusp {

Rat rat_from_string(const std::string& s) {
  const auto bad = [&](const char* why) {
    throw ParseError("bad rational \"" + s + "\": " + why);
  };
  if (s.empty()) bad("empty");
  const auto slash = s.find('/');
  const std::string num = s.substr(0, slash);
  const std::string den = slash == std::string::npos ? "" : s.substr(slash + 1);
  const auto digits_ok = [](const std::string& t, bool sign_allowed) {
    if (t.empty()) return false;
    size_t i = 0;
    if (sign_allowed && (t[0] == '-' || t[0] == '+')) i = 1;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i)
      if (t[i] < '0' || t[i] > '9') return false;
    return true;
  };
  if (!digits_ok(num, true)) bad("numerator is not an integer");
  Int p(num);
  Int q(1);
  if (slash != std::string::npos) {
    if (!digits_ok(den, false)) bad("denominator is not a positive integer");
    q = Int(den);
    if (q == 0) bad("zero denominator");
  }
  Rat r(p, q);
  r.canonicalize();
  return r;
}

std::string rat_to_string(const Rat& q) { return q.get_str(); }

}  // namespace cusp
