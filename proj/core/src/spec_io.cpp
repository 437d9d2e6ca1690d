#include "extrema/spec_io.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>
#include <vector>

#include "extrema/errors.hpp"
#include "extrema/numeric.hpp"

namespace extrema {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) out.push_back(trim(cur));
  if (!s.empty() && s.back() == sep) out.emplace_back();
  return out;
}

// Line without comment and surrounding blanks.
std::string clean_line(const std::string& line) {
  const auto hash = line.find('#');
  return trim(hash == std::string::npos ? line : line.substr(0, hash));
}

int parse_int(const std::string& text, const std::string& what) {
  const std::uint64_t v = parse_count(text, what);
  if (v > 1'000'000) throw ParseError(what + ": value " + text + " too large");
  return static_cast<int>(v);
}

}  // namespace

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read file '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

EulerRootTable parse_roots_csv(const std::string& text) {
  EulerRootTable table;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string body = clean_line(line);
    if (body.empty()) continue;
    const auto cells = split(body, ',');
    const std::string where = "roots line " + std::to_string(lineno);
    if (table.empty() && !cells.empty() && cells[0] == "p") continue;  // header
    if (cells.size() < 3 || cells.size() % 2 == 0) {
      throw ParseError(where + ": expected p followed by (re, im) pairs");
    }
    const std::uint64_t p = parse_count(cells[0], where + " prime");
    std::vector<Complex> alphas;
    for (std::size_t i = 1; i + 1 < cells.size(); i += 2) {
      alphas.emplace_back(parse_double(cells[i], where + " real part"),
                          parse_double(cells[i + 1], where + " imaginary part"));
    }
    if (!table.emplace(p, std::move(alphas)).second) {
      throw ParseError(where + ": prime " + std::to_string(p) + " listed twice");
    }
  }
  return table;
}

EulerRootTable load_roots_csv(const std::filesystem::path& path) {
  return parse_roots_csv(read_text_file(path));
}

LFunctionSpec parse_spec(const std::string& text, const std::filesystem::path& base_dir) {
  std::map<std::string, std::string> kv;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string body = clean_line(line);
    if (body.empty()) continue;
    const auto eq = body.find('=');
    if (eq == std::string::npos) {
      throw ParseError("spec line " + std::to_string(lineno) + ": expected key=value");
    }
    const std::string key = trim(body.substr(0, eq));
    static const char* known[] = {"name", "kind", "q", "char_index", "kappa", "m",
                                  "dL", "roots", "root_bound", "delta"};
    if (std::find(std::begin(known), std::end(known), key) == std::end(known)) {
      throw ParseError("spec line " + std::to_string(lineno) + ": unknown key '" + key + "'");
    }
    if (!kv.emplace(key, trim(body.substr(eq + 1))).second) {
      throw ParseError("spec line " + std::to_string(lineno) + ": key '" + key + "' repeated");
    }
  }
  auto get = [&](const std::string& key) -> const std::string* {
    const auto it = kv.find(key);
    return it == kv.end() ? nullptr : &it->second;
  };
  const std::string* kind = get("kind");
  if (!kind) throw ParseError("spec: missing key 'kind'");

  auto spec = [&]() {
    if (*kind == "zeta") {
      LFunctionSpec s = LFunctionSpec::zeta();
      if (const auto* v = get("kappa")) s.set_kappa(parse_double(*v, "spec kappa"));
      if (const auto* v = get("dL")) s.set_degree(parse_double(*v, "spec dL"));
      if (const auto* v = get("m"); v && parse_int(*v, "spec m") != 1) {
        throw RangeError("zeta requires m = 1");
      }
      return s;
    }
    if (*kind == "dirichlet") {
      const auto* q = get("q");
      if (!q) throw ParseError("spec: dirichlet kind needs 'q'");
      const auto* idx = get("char_index");
      const double kappa = get("kappa") ? parse_double(*get("kappa"), "spec kappa") : 1.0;
      LFunctionSpec s = LFunctionSpec::dirichlet(parse_count(*q, "spec q"),
                                                 idx ? parse_count(*idx, "spec char_index") : 0,
                                                 kappa);
      if (const auto* v = get("dL")) s.set_degree(parse_double(*v, "spec dL"));
      if (const auto* v = get("m"); v && parse_int(*v, "spec m") != 1) {
        throw RangeError("Dirichlet L-functions have m = 1");
      }
      return s;
    }
    if (*kind == "euler-roots") {
      const auto* roots = get("roots");
      if (!roots) throw ParseError("spec: euler-roots kind needs 'roots'");
      std::filesystem::path rp(*roots);
      if (rp.is_relative()) rp = base_dir / rp;
      EulerRootTable table = load_roots_csv(rp);
      const int m = get("m") ? parse_int(*get("m"), "spec m")
                             : (table.empty() ? 1 : static_cast<int>(table.begin()->second.size()));
      const std::uint64_t bound = get("root_bound") ? parse_count(*get("root_bound"), "spec root_bound") : 0;
      const double dl = get("dL") ? parse_double(*get("dL"), "spec dL") : static_cast<double>(m);
      const double kappa = get("kappa") ? parse_double(*get("kappa"), "spec kappa") : 1.0;
      return LFunctionSpec::euler_roots(get("name") ? *get("name") : "L", std::move(table), bound, m,
                                        dl, kappa);
    }
    throw ParseError("spec: unknown kind '" + *kind + "'");
  }();
  if (const auto* v = get("name")) spec.set_name(*v);
  if (const auto* v = get("delta")) spec.set_axiom_delta(parse_double(*v, "spec delta"));
  return spec;
}

LFunctionSpec load_spec(const std::filesystem::path& path) {
  return parse_spec(read_text_file(path), path.parent_path());
}

ChenInstance parse_instance(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  bool have_header = false;
  int M = 0;
  double T1 = 0.0;
  double T2 = 0.0;
  std::vector<double> lambdas;
  std::vector<double> betas;
  std::vector<double> deltas;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string body = clean_line(line);
    if (body.empty()) continue;
    const std::string where = "instance line " + std::to_string(lineno);
    if (!have_header) {
      bool got_m = false;
      bool got_t1 = false;
      bool got_t2 = false;
      for (const std::string& cell : split(body, ',')) {
        const auto eq = cell.find('=');
        if (eq == std::string::npos) throw ParseError(where + ": expected M=..,T1=..,T2=..");
        const std::string key = trim(cell.substr(0, eq));
        const std::string val = trim(cell.substr(eq + 1));
        if (key == "M") {
          M = parse_int(val, where + " M");
          got_m = true;
        } else if (key == "T1") {
          T1 = parse_double(val, where + " T1");
          got_t1 = true;
        } else if (key == "T2") {
          T2 = parse_double(val, where + " T2");
          got_t2 = true;
        } else {
          throw ParseError(where + ": unknown header key '" + key + "'");
        }
      }
      if (!(got_m && got_t1 && got_t2)) throw ParseError(where + ": header needs M, T1 and T2");
      have_header = true;
      continue;
    }
    if (body == "lambda,beta,delta") continue;
    const auto cells = split(body, ',');
    if (cells.size() != 3) throw ParseError(where + ": expected lambda,beta,delta");
    lambdas.push_back(parse_double(cells[0], where + " lambda"));
    betas.push_back(parse_double(cells[1], where + " beta"));
    deltas.push_back(parse_double(cells[2], where + " delta"));
  }
  if (!have_header) throw ParseError("instance: missing M=..,T1=..,T2=.. header");
  return ChenInstance(std::move(lambdas), std::move(betas), std::move(deltas), M, T1, T2);
}

ChenInstance load_instance(const std::filesystem::path& path) {
  return parse_instance(read_text_file(path));
}

}  // namespace extrema
