#include "hq/job.hpp"

#include <cctype>
#include <charconv>
#include <set>
#include <sstream>

#include "hq/parse.hpp"

namespace hq {

JobError::JobError(const std::string& msg, SourcePos pos)
    : std::runtime_error(pos.line ? "line " + std::to_string(pos.line) + ", column " + std::to_string(pos.column) +
                                        ": " + msg
                                  : msg),
      pos_(pos) {}

namespace {

struct Token {
  std::string text;
  size_t col = 0;  // 0-based
};

// Splits at whitespace outside brackets and parentheses.
std::vector<Token> tokenize(const std::string& line) {
  std::vector<Token> out;
  int depth = 0;
  size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i >= line.size()) break;
    size_t start = i;
    while (i < line.size() && (depth > 0 || !std::isspace(static_cast<unsigned char>(line[i])))) {
      if (line[i] == '[' || line[i] == '(') ++depth;
      if (line[i] == ']' || line[i] == ')') --depth;
      ++i;
    }
    out.push_back({line.substr(start, i - start), start});
  }
  return out;
}

bool is_identifier(const std::string& s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  for (char c : s)
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
  return true;
}

class Reader {
 public:
  Reader(JobSpec& job, bool intertwiners_only) : job_(job), only_arrows_(intertwiners_only) {}

  void read(const std::string& text) {
    std::istringstream in(text);
    std::string raw;
    size_t lineno = 0;
    while (std::getline(in, raw)) {
      ++lineno;
      line_ = lineno;
      std::string line = raw.substr(0, raw.find('#'));
      if (!line.empty() && line.back() == '\r') line.pop_back();
      line_text_ = line;
      toks_ = tokenize(line);
      if (toks_.empty()) continue;
      statement();
    }
  }

 private:
  SourcePos at(size_t k) const { return {line_, (k < toks_.size() ? toks_[k].col : line_text_.size()) + 1}; }
  [[noreturn]] void fail(const std::string& msg, size_t k) const { throw JobError(msg, at(k)); }

  void need(size_t n, const std::string& usage) const {
    if (toks_.size() != n) fail("expected '" + usage + "'", std::min(toks_.size(), n));
  }
  void need_at_least(size_t n, const std::string& usage) const {
    if (toks_.size() < n) fail("expected '" + usage + "'", toks_.size());
  }
  // Remaining text of the line from token k on.
  JobText rest(size_t k) const {
    if (k >= toks_.size()) fail("missing value", k);
    return {trim(line_text_.substr(toks_[k].col)), at(k)};
  }
  size_t number(size_t k, size_t lo = 0) const {
    const std::string& s = toks_[k].text;
    size_t v = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || p != s.data() + s.size()) fail("expected a non-negative integer, got '" + s + "'", k);
    if (v < lo) fail("value must be at least " + std::to_string(lo), k);
    return v;
  }
  std::string ident(size_t k) const {
    if (!is_identifier(toks_[k].text)) fail("expected a name, got '" + toks_[k].text + "'", k);
    return toks_[k].text;
  }
  void once(const std::string& key) {
    if (!seen_.insert(key).second) fail("duplicate '" + key + "' statement", 0);
  }
  // "key=value" into its parts.
  std::pair<std::string, JobText> keyed(size_t k) const {
    const std::string& t = toks_[k].text;
    size_t eq = t.find('=');
    if (eq == std::string::npos || eq == 0) fail("expected name=value, got '" + t + "'", k);
    std::string key = t.substr(0, eq);
    if (!is_identifier(key)) fail("expected a name before '=', got '" + key + "'", k);
    return {key, JobText{t.substr(eq + 1), {line_, toks_[k].col + eq + 2}}};
  }
  void expect(size_t k, const std::string& word) const {
    if (k >= toks_.size() || toks_[k].text != word) fail("expected '" + word + "'", k);
  }

  void statement() {
    const std::string& key = toks_[0].text;
    if (only_arrows_ && key != "arrow" && key != "xi")
      fail("only 'arrow' and 'xi' statements are allowed in an intertwiner file", 0);
    if (key == "name") {
      once(key);
      need(2, "name <id>");
      job_.name = ident(1);
    } else if (key == "order") {
      once(key);
      need(2, "order <N>");
      job_.order = static_cast<int>(number(1, 1));
    } else if (key == "hopf") {
      once(key);
      need(2, "hopf <kind>");
      static const std::set<std::string> kinds = {"trivial", "kac_palyutkin", "group_algebra", "dual_group",
                                                  "tables"};
      if (!kinds.count(toks_[1].text))
        fail("unknown hopf kind '" + toks_[1].text +
                 "' (expected trivial, kac_palyutkin, group_algebra, dual_group or tables)",
             1);
      job_.hopf = toks_[1].text;
      job_.hopf_pos = at(1);
    } else if (key == "generator") {
      need(4, "generator <name> perm|matrix <value>");
      GeneratorSpec g;
      g.name = ident(1);
      if (toks_[2].text != "perm" && toks_[2].text != "matrix") fail("expected 'perm' or 'matrix'", 2);
      g.is_perm = toks_[2].text == "perm";
      g.value = rest(3);
      for (const auto& o : job_.generators)
        if (o.name == g.name) fail("duplicate generator '" + g.name + "'", 1);
      job_.generators.push_back(g);
    } else if (key == "elements") {
      once(key);
      need_at_least(2, "elements <word> ...");
      for (size_t k = 1; k < toks_.size(); ++k) job_.elements.push_back(toks_[k].text);
    } else if (key == "irreps") {
      once(key);
      need(2, "irreps characters");
      expect(1, "characters");
      job_.character_irreps = true;
    } else if (key == "irrep") {
      need_at_least(2, "irrep <name> <generator>=[[..]] ...");
      IrrepSpec ir;
      ir.name = ident(1);
      ir.pos = at(1);
      for (size_t k = 2; k < toks_.size(); ++k) ir.images.push_back(keyed(k));
      for (const auto& o : job_.irreps)
        if (o.name == ir.name) fail("duplicate irrep '" + ir.name + "'", 1);
      job_.irreps.push_back(ir);
    } else if (key == "basis") {
      once(key);
      need_at_least(2, "basis <name> ...");
      for (size_t k = 1; k < toks_.size(); ++k) {
        std::string b = ident(k);
        for (const auto& o : job_.tables.basis)
          if (o == b) fail("duplicate basis element '" + b + "'", k);
        job_.tables.basis.push_back(b);
      }
      job_.tables.pos = at(0);
    } else if (key == "unit") {
      once(key);
      job_.tables.unit = rest(1);
    } else if (key == "mult") {
      need_at_least(5, "mult <b> <b> = <combination>");
      expect(3, "=");
      job_.tables.mult.push_back({{ident(1), ident(2)}, rest(4)});
    } else if (key == "coproduct" || key == "counit" || key == "antipode") {
      need_at_least(4, key + " <b> = <value>");
      expect(2, "=");
      auto& list = key == "coproduct" ? job_.tables.coproduct
                   : key == "counit"  ? job_.tables.counit
                                      : job_.tables.antipode;
      list.push_back({ident(1), rest(3)});
    } else if (key == "hopf_generators") {
      once(key);
      need_at_least(2, "hopf_generators <b> ...");
      for (size_t k = 1; k < toks_.size(); ++k) job_.tables.generators.push_back(ident(k));
    } else if (key == "variables") {
      once(key);
      need_at_least(2, "variables <name> ...");
      for (size_t k = 1; k < toks_.size(); ++k) {
        std::string v = ident(k);
        for (const auto& o : job_.variables)
          if (o == v) fail("duplicate variable '" + v + "'", k);
        job_.variables.push_back(v);
      }
    } else if (key == "action") {
      once(key);
      need_at_least(2, "action trivial | action irrep <name> | action <generator>=[[..]] ...");
      job_.action_pos = at(1);
      if (toks_[1].text == "trivial") {
        need(2, "action trivial");
        job_.action_kind = "trivial";
      } else if (toks_[1].text == "irrep") {
        need(3, "action irrep <name>");
        job_.action_kind = "irrep";
        job_.action_irrep = ident(2);
      } else {
        job_.action_kind = "matrices";
        for (size_t k = 1; k < toks_.size(); ++k) job_.action.push_back(keyed(k));
      }
    } else if (key == "degrees") {
      once(key);
      need_at_least(2, "degrees <variable>=<word> ...");
      job_.degrees_pos = at(1);
      for (size_t k = 1; k < toks_.size(); ++k) {
        auto [v, w] = keyed(k);
        job_.degrees.emplace_back(v, w.text);
      }
    } else if (key == "superpotential") {
      once(key);
      job_.superpotential = rest(1);
    } else if (key == "sigma") {
      once(key);
      job_.sigma = rest(1);
    } else if (key == "ell" || key == "m" || key == "dmax") {
      once(key);
      need(2, key + " <n>");
      size_t v = number(1, key == "m" ? 0 : 1);
      (key == "ell" ? job_.ell : key == "m" ? job_.m : job_.dmax) = v;
    } else if (key == "gkdim") {
      once(key);
      need(2, "gkdim <n>");
      job_.gkdim = static_cast<int>(number(1));
    } else if (key == "route") {
      once(key);
      need(2, "route auto|general|dual_group|abelian");
      static const std::set<std::string> routes = {"auto", "general", "dual_group", "abelian"};
      if (!routes.count(toks_[1].text)) fail("unknown route '" + toks_[1].text + "'", 1);
      job_.route = toks_[1].text;
    } else if (key == "arrow") {
      if (toks_.size() != 5 && toks_.size() != 6) fail("expected 'arrow <name> <tail> -> <head> [<index>]'", 0);
      ArrowSpec a;
      a.name = toks_[1].text;
      if (!is_identifier(a.name)) fail("expected an arrow name", 1);
      a.tail = number(2);
      expect(3, "->");
      a.head = number(4);
      if (toks_.size() == 6) a.local = number(5);
      a.pos = at(1);
      for (const auto& o : job_.arrows) {
        if (o.name == a.name) fail("duplicate arrow '" + a.name + "'", 1);
        if (o.tail == a.tail && o.head == a.head && o.local == a.local)
          fail("arrow " + std::to_string(a.tail) + " -> " + std::to_string(a.head) + " [" + std::to_string(a.local) +
                   "] is already named '" + o.name + "'",
               1);
      }
      job_.arrows.push_back(a);
    } else if (key == "xi") {
      need_at_least(3, "xi <arrow> [[..]]");
      XiSpec x{toks_[1].text, rest(2)};
      for (const auto& o : job_.xi)
        if (o.arrow == x.arrow) fail("duplicate xi for arrow '" + x.arrow + "'", 1);
      job_.xi.push_back(x);
    } else {
      fail("unknown statement '" + key + "'", 0);
    }
  }

  JobSpec& job_;
  bool only_arrows_;
  size_t line_ = 0;
  std::string line_text_;
  std::vector<Token> toks_;
  std::set<std::string> seen_;
};

std::vector<std::string> action_generator_names(const JobSpec& job) {
  if (job.hopf == "kac_palyutkin") return {"x", "y", "z"};
  if (job.hopf == "group_algebra") {
    std::vector<std::string> out;
    for (const auto& g : job.generators) out.push_back(g.name);
    return out;
  }
  if (job.hopf == "tables") return job.tables.generators;
  return {};
}

size_t index_of(const std::vector<std::string>& names, const std::string& n) {
  for (size_t i = 0; i < names.size(); ++i)
    if (names[i] == n) return i;
  return names.size();
}

// Parses every scalar text once, so that malformed input is reported with its
// position before any computation runs.
void check_job(const JobSpec& job) {
  const CycContext& ctx = make_context(job.order);
  if (job.hopf.empty()) throw JobError("missing 'hopf' statement", {});
  if (job.variables.empty()) throw JobError("missing 'variables' statement", {});
  if (!job.superpotential) throw JobError("missing 'superpotential' statement", {});
  if (job.ell < 2) throw JobError("missing or invalid 'ell' (need ell >= 2)", {});
  if (job.m > job.ell || job.m == 0) throw JobError("'m' must satisfy 1 <= m <= ell", {});
  size_t r = job.variables.size();

  std::vector<std::string> gens = action_generator_names(job);
  bool is_group = job.hopf == "group_algebra" || job.hopf == "dual_group";
  if (is_group && job.generators.empty()) throw JobError("a group needs at least one 'generator' statement", job.hopf_pos);
  if (!is_group && !job.generators.empty())
    throw JobError("'generator' statements need hopf group_algebra or dual_group", job.hopf_pos);
  for (const auto& g : job.generators) {
    if (g.is_perm) {
      job_permutation(g.value);
    } else {
      Matrix m = job_matrix(g.value, ctx);
      if (m.rows() != m.cols())
        throw JobError("generator " + g.name + ": matrix is " + std::to_string(m.rows()) + "x" +
                           std::to_string(m.cols()) + ", expected a square matrix",
                       g.value.pos);
    }
  }
  if (job.hopf != "group_algebra" && (job.character_irreps || !job.irreps.empty()) && job.hopf != "tables")
    throw JobError("irreps can only be given for hopf group_algebra or tables", job.hopf_pos);
  if (job.hopf == "group_algebra" && !job.character_irreps && job.irreps.empty())
    throw JobError("a group algebra needs 'irreps characters' or 'irrep' statements", job.hopf_pos);
  if (job.character_irreps && !job.irreps.empty())
    throw JobError("'irreps characters' and explicit 'irrep' statements exclude each other", job.irreps[0].pos);
  for (const auto& ir : job.irreps) {
    if (ir.images.size() != gens.size())
      throw JobError("irrep " + ir.name + " gives " + std::to_string(ir.images.size()) + " matrices; expected one per generator (" +
                         std::to_string(gens.size()) + ")",
                     ir.pos);
    size_t dim = 0;
    for (size_t k = 0; k < ir.images.size(); ++k) {
      const auto& [g, t] = ir.images[k];
      if (index_of(gens, g) != k)
        throw JobError("irrep " + ir.name + ": expected generator '" + (k < gens.size() ? gens[k] : "") + "', got '" + g + "'",
                       t.pos);
      Matrix m = job_matrix(t, ctx);
      if (m.rows() != m.cols() || (k > 0 && m.rows() != dim))
        throw JobError("irrep " + ir.name + " " + g + ": matrix is " + std::to_string(m.rows()) + "x" +
                           std::to_string(m.cols()) + ", expected " + std::to_string(k ? dim : m.rows()) + "x" +
                           std::to_string(k ? dim : m.rows()),
                       t.pos);
      dim = m.rows();
    }
  }

  const auto& tb = job.tables;
  if (job.hopf == "tables") {
    if (tb.basis.empty()) throw JobError("hopf tables needs a 'basis' statement", job.hopf_pos);
    if (!tb.unit) throw JobError("hopf tables needs a 'unit' statement", tb.pos);
    if (tb.generators.empty()) throw JobError("hopf tables needs a 'hopf_generators' statement", tb.pos);
    if (job.irreps.empty()) throw JobError("hopf tables needs 'irrep' statements", tb.pos);
    for (const auto& g : tb.generators)
      if (index_of(tb.basis, g) == tb.basis.size()) throw JobError("undeclared basis element '" + g + "' in hopf_generators", tb.pos);
    job_combination(*tb.unit, tb.basis, ctx);
    auto check_name = [&](const std::string& b, SourcePos pos) {
      if (index_of(tb.basis, b) == tb.basis.size()) throw JobError("undeclared basis element '" + b + "'", pos);
    };
    for (const auto& [bb, t] : tb.mult) {
      check_name(bb.first, t.pos);
      check_name(bb.second, t.pos);
      if (t.text != "0") job_combination(t, tb.basis, ctx);
    }
    for (const auto& [b, t] : tb.coproduct) {
      check_name(b, t.pos);
      job_coproduct(t, tb.basis, ctx);
    }
    for (const auto& [b, t] : tb.counit) {
      check_name(b, t.pos);
      job_scalar(t, ctx);
    }
    for (const auto& [b, t] : tb.antipode) {
      check_name(b, t.pos);
      if (t.text != "0") job_combination(t, tb.basis, ctx);
    }
  } else if (!tb.basis.empty() || tb.unit || !tb.mult.empty() || !tb.coproduct.empty() || !tb.counit.empty() ||
             !tb.antipode.empty() || !tb.generators.empty()) {
    throw JobError("structure tables need 'hopf tables'", tb.pos);
  }

  if (job.hopf == "dual_group") {
    if (!job.action_kind.empty()) throw JobError("a dual group acts through 'degrees', not 'action'", job.action_pos);
    if (job.degrees.size() != r)
      throw JobError("'degrees' must give one group element per variable (" + std::to_string(r) + ")",
                     job.degrees_pos);
    for (size_t s = 0; s < r; ++s)
      if (job.degrees[s].first != job.variables[s])
        throw JobError("degrees: expected variable '" + job.variables[s] + "', got '" + job.degrees[s].first + "'",
                       job.degrees_pos);
  } else {
    if (!job.degrees.empty()) throw JobError("'degrees' needs hopf dual_group", job.degrees_pos);
    if (job.action_kind.empty()) throw JobError("missing 'action' statement", {});
    if (job.action_kind == "irrep") {
      bool found = false;
      for (const auto& ir : job.irreps) found = found || ir.name == job.action_irrep;
      if (!found && !job.character_irreps && job.hopf != "kac_palyutkin")
        throw JobError("undeclared irrep '" + job.action_irrep + "'", job.action_pos);
    }
    if (job.action_kind == "matrices") {
      if (job.action.size() != gens.size())
        throw JobError("action gives " + std::to_string(job.action.size()) + " matrices; expected one per generator (" +
                           std::to_string(gens.size()) + ")",
                       job.action_pos);
      for (size_t k = 0; k < job.action.size(); ++k) {
        const auto& [g, t] = job.action[k];
        if (index_of(gens, g) != k)
          throw JobError("action: expected generator '" + gens[k] + "', got '" + g + "'", t.pos);
        Matrix m = job_matrix(t, ctx);
        if (m.rows() != r || m.cols() != r)
          throw JobError("action " + g + ": matrix is " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()) +
                             ", expected " + std::to_string(r) + "x" + std::to_string(r) + " (" + std::to_string(r) +
                             " variables)",
                         t.pos);
      }
    }
  }

  auto w = job_combination(*job.superpotential, job.variables, ctx);
  for (const auto& [word, c] : w)
    if (word.size() != job.ell)
      throw JobError("superpotential term of degree " + std::to_string(word.size()) + "; expected degree ell = " +
                         std::to_string(job.ell),
                     job.superpotential->pos);
  if (job.sigma) {
    Matrix s = job_matrix(*job.sigma, ctx);
    if (s.rows() != r || s.cols() != r)
      throw JobError("sigma: matrix is " + std::to_string(s.rows()) + "x" + std::to_string(s.cols()) + ", expected " +
                         std::to_string(r) + "x" + std::to_string(r),
                     job.sigma->pos);
  }
  for (const auto& x : job.xi) job_matrix(x.matrix, ctx);
}

}  // namespace

Scalar job_scalar(const JobText& t, const CycContext& ctx) {
  try {
    return parse_scalar(t.text, ctx);
  } catch (const ParseError& e) {
    throw JobError(e.what(), {t.pos.line, t.pos.column + e.column()});
  }
}

Matrix job_matrix(const JobText& t, const CycContext& ctx) {
  try {
    return parse_matrix(t.text, ctx);
  } catch (const ParseError& e) {
    throw JobError(e.what(), {t.pos.line, t.pos.column + e.column()});
  }
}

std::vector<int> job_permutation(const JobText& t) {
  std::string s = trim(t.text);
  if (s.size() < 2 || s.front() != '[' || s.back() != ']')
    throw JobError("permutation must look like [1, 2, 0]", t.pos);
  std::vector<int> out;
  std::string body = s.substr(1, s.size() - 2);
  size_t start = 0;
  for (size_t k = 0; k <= body.size(); ++k) {
    if (k < body.size() && body[k] != ',') continue;
    std::string e = trim(body.substr(start, k - start));
    int v = -1;
    auto [p, ec] = std::from_chars(e.data(), e.data() + e.size(), v);
    if (ec != std::errc() || p != e.data() + e.size() || v < 0)
      throw JobError("permutation entry '" + e + "' is not a non-negative integer", {t.pos.line, t.pos.column + 1 + start});
    out.push_back(v);
    start = k + 1;
  }
  std::vector<bool> hit(out.size(), false);
  for (int v : out) {
    if (static_cast<size_t>(v) >= out.size() || hit[v])
      throw JobError("not a permutation of 0.." + std::to_string(out.size() - 1), t.pos);
    hit[v] = true;
  }
  return out;
}

std::vector<std::pair<std::vector<size_t>, Scalar>> job_combination(const JobText& t,
                                                                     const std::vector<std::string>& names,
                                                                     const CycContext& ctx) {
  try {
    return parse_linear_combination(t.text, names, ctx);
  } catch (const ParseError& e) {
    throw JobError(e.what(), {t.pos.line, t.pos.column + e.column()});
  }
}

std::vector<std::tuple<size_t, size_t, Scalar>> job_coproduct(const JobText& t, const std::vector<std::string>& names,
                                                              const CycContext& ctx) {
  std::vector<std::tuple<size_t, size_t, Scalar>> out;
  for (const auto& term : split_terms(t.text)) {
    SourcePos pos{t.pos.line, t.pos.column + term.offset};
    size_t at = term.text.find('@');
    if (at == std::string::npos) throw JobError("coproduct term '" + term.text + "' needs the form c*b@b", pos);
    auto left = job_combination(JobText{term.text.substr(0, at), pos}, names, ctx);
    std::string right = trim(term.text.substr(at + 1));
    size_t k = index_of(names, right);
    if (left.size() != 1 || left[0].first.size() != 1 || k == names.size())
      throw JobError("coproduct term '" + term.text + "' needs the form c*b@b with basis elements b", pos);
    out.emplace_back(left[0].first[0], k, left[0].second * Scalar(term.sign));
  }
  return out;
}

JobSpec parse_job(const std::string& text) {
  JobSpec job;
  Reader(job, false).read(text);
  check_job(job);
  return job;
}

void merge_intertwiners(JobSpec& job, const std::string& text) {
  JobSpec extra;
  Reader(extra, true).read(text);
  for (const auto& a : extra.arrows) {
    for (auto& o : job.arrows)
      if (o.name == a.name || (o.tail == a.tail && o.head == a.head && o.local == a.local))
        throw JobError("arrow '" + a.name + "' conflicts with arrow '" + o.name + "' of the job", a.pos);
    job.arrows.push_back(a);
  }
  const CycContext& ctx = make_context(job.order);
  for (const auto& x : extra.xi) {
    for (const auto& o : job.xi)
      if (o.arrow == x.arrow) throw JobError("duplicate xi for arrow '" + x.arrow + "'", x.matrix.pos);
    job_matrix(x.matrix, ctx);
    job.xi.push_back(x);
  }
}

std::string print_job(const JobSpec& job) {
  std::ostringstream o;
  o << "name " << job.name << "\n";
  o << "order " << job.order << "\n";
  o << "hopf " << job.hopf << "\n";
  for (const auto& g : job.generators) o << "generator " << g.name << (g.is_perm ? " perm " : " matrix ") << g.value.text << "\n";
  if (!job.elements.empty()) {
    o << "elements";
    for (const auto& e : job.elements) o << " " << e;
    o << "\n";
  }
  const auto& tb = job.tables;
  if (!tb.basis.empty()) {
    o << "basis";
    for (const auto& b : tb.basis) o << " " << b;
    o << "\n";
  }
  if (tb.unit) o << "unit " << tb.unit->text << "\n";
  for (const auto& [bb, t] : tb.mult) o << "mult " << bb.first << " " << bb.second << " = " << t.text << "\n";
  for (const auto& [b, t] : tb.coproduct) o << "coproduct " << b << " = " << t.text << "\n";
  for (const auto& [b, t] : tb.counit) o << "counit " << b << " = " << t.text << "\n";
  for (const auto& [b, t] : tb.antipode) o << "antipode " << b << " = " << t.text << "\n";
  if (!tb.generators.empty()) {
    o << "hopf_generators";
    for (const auto& b : tb.generators) o << " " << b;
    o << "\n";
  }
  if (job.character_irreps) o << "irreps characters\n";
  for (const auto& ir : job.irreps) {
    o << "irrep " << ir.name;
    for (const auto& [g, t] : ir.images) o << " " << g << "=" << t.text;
    o << "\n";
  }
  o << "variables";
  for (const auto& v : job.variables) o << " " << v;
  o << "\n";
  if (job.action_kind == "trivial") o << "action trivial\n";
  if (job.action_kind == "irrep") o << "action irrep " << job.action_irrep << "\n";
  if (job.action_kind == "matrices") {
    o << "action";
    for (const auto& [g, t] : job.action) o << " " << g << "=" << t.text;
    o << "\n";
  }
  if (!job.degrees.empty()) {
    o << "degrees";
    for (const auto& [v, w] : job.degrees) o << " " << v << "=" << w;
    o << "\n";
  }
  if (job.superpotential) o << "superpotential " << job.superpotential->text << "\n";
  if (job.sigma) o << "sigma " << job.sigma->text << "\n";
  o << "ell " << job.ell << "\n";
  o << "m " << job.m << "\n";
  if (job.gkdim) o << "gkdim " << job.gkdim << "\n";
  o << "dmax " << job.dmax << "\n";
  o << "route " << job.route << "\n";
  for (const auto& a : job.arrows)
    o << "arrow " << a.name << " " << a.tail << " -> " << a.head << " " << a.local << "\n";
  for (const auto& x : job.xi) o << "xi " << x.arrow << " " << x.matrix.text << "\n";
  return o.str();
}

}  // namespace hq
