#include "hq/examples.hpp"

#include <charconv>
#include <sstream>

#include "hq/group.hpp"
#include "hq/job.hpp"

namespace hq {

namespace {

std::string kac_palyutkin(const std::string& name, const std::string& w) {
  return "name " + name +
         "\n"
         "order 4\n"
         "hopf kac_palyutkin\n"
         "variables u v\n"
         "action irrep V4\n"
         "superpotential " +
         w +
         "\n"
         "ell 2\n"
         "m 2\n"
         "gkdim 2\n"
         "route general\n"
         "arrow a 0 -> 4\n"
         "arrow b 1 -> 4\n"
         "arrow d 2 -> 4\n"
         "arrow c 3 -> 4\n"
         "arrow A 4 -> 0\n"
         "arrow B 4 -> 1\n"
         "arrow D 4 -> 2\n"
         "arrow C 4 -> 3\n"
         "xi a [[1, 0], [0, 1]]\n"
         "xi b [[1, 0], [0, -1]]\n"
         "xi d [[0, -z], [1, 0]]\n"
         "xi c [[0, z], [1, 0]]\n"
         "xi A [[1], [0], [0], [1]]\n"
         "xi B [[1], [0], [0], [-1]]\n"
         "xi D [[0], [z], [1], [0]]\n"
         "xi C [[0], [-z], [1], [0]]\n";
}

std::vector<std::vector<int>> dihedral_perms(int n) {
  std::vector<int> g(n), h(n);
  for (int x = 0; x < n; ++x) {
    g[x] = (n - x) % n;
    h[x] = (n + 1 - x) % n;
  }
  return {g, h};
}

std::vector<std::string> dihedral_words(int n) {
  std::vector<std::string> words;
  for (int i = 0; i < n; ++i) {
    std::string p = i == 0 ? "" : i == 1 ? "hg" : "(hg)^" + std::to_string(i);
    words.push_back(i ? p : "1");
    words.push_back("g" + p);
  }
  return words;
}

std::string perm_str(const std::vector<int>& p) {
  std::string s = "[";
  for (size_t i = 0; i < p.size(); ++i) s += (i ? ", " : "") + std::to_string(p[i]);
  return s + "]";
}

// The dual group algebra of D_n, generated by two reflections g, h with hg a
// rotation of order n; u has degree g and v degree h. The McKay quiver is a
// cycle of length 2n with arrows in both directions: i -> i+1 is named by the
// lowercase letter of i, the reverse arrow by the uppercase letter of its head.
std::string dual_dihedral(int n) {
  auto perms = dihedral_perms(n);
  auto words = dihedral_words(n);
  FiniteGroup g = group_from_permutations({"g", "h"}, perms, words);
  std::ostringstream o;
  o << "name dual_D" << n << "\n"
    << "order 1\n"
    << "hopf dual_group\n"
    << "generator g perm " << perm_str(perms[0]) << "\n"
    << "generator h perm " << perm_str(perms[1]) << "\n"
    << "elements";
  for (const auto& w : words) o << " " << w;
  o << "\n"
    << "variables u v\n"
    << "degrees u=g v=h\n"
    << "superpotential u*u - v*v\n"
    << "ell 2\n"
    << "m 2\n"
    << "gkdim 2\n";
  size_t len = g.size();
  for (size_t head = 0; head < len; ++head)
    for (size_t s : g.generators) {
      size_t tail = g.mul(s, head);
      std::string nm = head == (tail + 1) % len ? std::string(1, static_cast<char>('a' + tail))
                                                 : std::string(1, static_cast<char>('A' + head));
      o << "arrow " << nm << " " << tail << " -> " << head << "\n";
    }
  return o.str();
}

std::string downup() {
  return "name downup_dualD4\n"
         "order 1\n"
         "hopf dual_group\n"
         "generator g perm [1, 2, 3, 0]\n"
         "generator h perm [0, 3, 2, 1]\n"
         "elements 1 g g^2 g^3 h gh g^2h g^3h\n"
         "variables u v\n"
         "degrees u=g v=h\n"
         "superpotential u*v*v*u - u*u*v*v + v*u*u*v - v*v*u*u\n"
         "ell 4\n"
         "m 3\n"
         "gkdim 3\n"
         "arrow b 0 -> 4\n"
         "arrow B 4 -> 0\n"
         "arrow c 2 -> 6\n"
         "arrow C 6 -> 2\n"
         "arrow D 3 -> 5\n"
         "arrow d 5 -> 3\n"
         "arrow E 1 -> 7\n"
         "arrow e 7 -> 1\n"
         "arrow f 0 -> 3\n"
         "arrow J 6 -> 5\n"
         "arrow K 1 -> 0\n"
         "arrow l 7 -> 6\n"
         "arrow F 3 -> 2\n"
         "arrow j 5 -> 4\n"
         "arrow L 4 -> 7\n"
         "arrow k 2 -> 1\n";
}

// C_n acting by diag(z, z^-1) on k_q[u, v]; vertex i is the character g -> z^i,
// a<i> runs i -> i+1 and A<i> runs i+1 -> i.
std::string cyclic(int n, long q, const std::string& name) {
  std::ostringstream o;
  o << "name " << name << "\n"
    << "order " << n << "\n"
    << "hopf group_algebra\n"
    << "generator g matrix [[z, 0], [0, z^-1]]\n"
    << "irreps characters\n"
    << "variables u v\n"
    << "action g=[[z, 0], [0, z^-1]]\n"
    << "superpotential v*u - " << (q < 0 ? "(" + std::to_string(q) + ")" : std::to_string(q)) << "*u*v\n"
    << "ell 2\n"
    << "m 2\n"
    << "gkdim 2\n";
  for (int i = 0; i < n; ++i) o << "arrow a" << i << " " << i << " -> " << (i + 1) % n << "\n";
  for (int i = 0; i < n; ++i) o << "arrow A" << i << " " << (i + 1) % n << " -> " << i << "\n";
  return o.str();
}

// D_n (n even) acting on k[u, v] through its two-dimensional representation
// r -> diag(w, w^-1), s -> swap, with w a primitive n-th root of unity.
std::string dihedral_case_d(int n) {
  std::ostringstream o;
  o << "name dihedral_case_d_n" << n << "\n"
    << "order " << n << "\n"
    << "hopf group_algebra\n"
    << "generator r matrix [[z, 0], [0, z^-1]]\n"
    << "generator s matrix [[0, 1], [1, 0]]\n"
    << "irrep triv r=[[1]] s=[[1]]\n"
    << "irrep sign r=[[1]] s=[[-1]]\n"
    << "irrep alt r=[[-1]] s=[[1]]\n"
    << "irrep altsign r=[[-1]] s=[[-1]]\n";
  for (int k = 1; k < n / 2; ++k)
    o << "irrep rho" << k << " r=[[z^" << k << ", 0], [0, z^-" << k << "]] s=[[0, 1], [1, 0]]\n";
  o << "variables u v\n"
    << "action r=[[z, 0], [0, z^-1]] s=[[0, 1], [1, 0]]\n"
    << "superpotential u*v + v*u\n"
    << "ell 2\n"
    << "m 2\n"
    << "gkdim 2\n";
  return o.str();
}

std::string swap_c2(const std::string& name, const std::string& w, const std::string& extra = "") {
  return "name " + name +
         "\n"
         "order 1\n"
         "hopf group_algebra\n"
         "generator g matrix [[0, 1], [1, 0]]\n"
         "irreps characters\n"
         "variables u v\n"
         "action g=[[0, 1], [1, 0]]\n"
         "superpotential " +
         w + "\n" + (extra.empty() ? "ell 2\nm 2\ngkdim 2\n" : extra);
}

bool parse_int(const std::string& s, long& v) {
  if (s.empty()) return false;
  bool neg = s[0] == 'm';
  const char* b = s.data() + (neg ? 1 : 0);
  auto [p, ec] = std::from_chars(b, s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size() || b == p) return false;
  if (neg) v = -v;
  return true;
}

}  // namespace

std::vector<std::string> example_names() {
  return {"kac_palyutkin_A", "kac_palyutkin_B", "dual_D3",          "dual_D4",        "dual_D5",
          "dual_D6",         "downup_dualD4",   "cyclic_q",         "L1_case_c",      "jordan_case_h",
          "trivial_polyring", "dihedral_case_d_n4", "dihedral_case_d_n6"};
}

std::vector<std::string> control_names() {
  return {"control_relations_unstable", "control_line_unstable", "control_not_inner_faithful"};
}

std::string example_job(const std::string& name) {
  if (name == "kac_palyutkin_A") return kac_palyutkin(name, "u*u + v*v");
  if (name == "kac_palyutkin_B") return kac_palyutkin(name, "u*u - v*v");
  if (name == "downup_dualD4") return downup();
  if (name == "cyclic_q") return cyclic(3, 2, name);
  if (name == "L1_case_c")
    return swap_c2(name, "u*v + v*u",
                   "ell 2\nm 2\ngkdim 2\narrow a 0 -> 0\narrow b 0 -> 1\narrow B 1 -> 0\narrow c 1 -> 1\n");
  if (name == "jordan_case_h")
    return "name jordan_case_h\n"
           "order 1\n"
           "hopf group_algebra\n"
           "generator g matrix [[-1, 0], [0, -1]]\n"
           "irreps characters\n"
           "variables u v\n"
           "action g=[[-1, 0], [0, -1]]\n"
           "superpotential v*u - u*v - u*u\n"
           "ell 2\n"
           "m 2\n"
           "gkdim 2\n"
           "arrow B 0 -> 1 0\n"
           "arrow a 0 -> 1 1\n"
           "arrow A 1 -> 0 0\n"
           "arrow b 1 -> 0 1\n";
  if (name == "trivial_polyring")
    return "name trivial_polyring\n"
           "order 1\n"
           "hopf trivial\n"
           "variables u v\n"
           "action trivial\n"
           "superpotential u*v - v*u\n"
           "ell 2\n"
           "m 2\n"
           "gkdim 2\n"
           "arrow x 0 -> 0 0\n"
           "arrow y 0 -> 0 1\n";
  if (name == "control_relations_unstable") return swap_c2(name, "v*u - 2*u*v");
  if (name == "control_line_unstable")
    return "name control_line_unstable\n"
           "order 1\n"
           "hopf group_algebra\n"
           "generator g matrix [[1, 0], [0, -1]]\n"
           "irreps characters\n"
           "variables u v\n"
           "action g=[[1, 0], [0, -1]]\n"
           "superpotential u*u*u + v*v*v\n"
           "ell 3\n"
           "m 2\n"
           "gkdim 2\n";
  if (name == "control_not_inner_faithful")
    return "name control_not_inner_faithful\n"
           "order 1\n"
           "hopf group_algebra\n"
           "generator g perm [1, 0]\n"
           "irreps characters\n"
           "variables u v\n"
           "action trivial\n"
           "superpotential u*v - v*u\n"
           "ell 2\n"
           "m 2\n"
           "gkdim 2\n";
  long n = 0, q = 0;
  if (name.rfind("dual_D", 0) == 0 && parse_int(name.substr(6), n) && n >= 3 && n <= 12)
    return dual_dihedral(static_cast<int>(n));
  if (name.rfind("cyclic_q_n", 0) == 0) {
    size_t us = name.find("_q", 10);
    if (us != std::string::npos && parse_int(name.substr(10, us - 10), n) && parse_int(name.substr(us + 2), q) &&
        n >= 3 && n <= 24 && q != 0)
      return cyclic(static_cast<int>(n), q, name);
  }
  if (name.rfind("dihedral_case_d_n", 0) == 0 && parse_int(name.substr(17), n) && n >= 4 && n % 2 == 0 && n <= 24)
    return dihedral_case_d(static_cast<int>(n));
  std::string known;
  for (const auto& e : example_names()) known += " " + e;
  throw JobError("unknown example '" + name + "' (known:" + known + "; families dual_D<n>, cyclic_q_n<n>_q<q>, "
                 "dihedral_case_d_n<n>)", {});
}

}  // namespace hq
