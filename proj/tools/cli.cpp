#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <atomic>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <mutex>
#include <optional>
#include <sstream>
#include <thread>

#include "aaj/aa.hpp"
#include "aaj/checkerboard.hpp"
#include "aaj/diagram.hpp"
#include "aaj/kauffman.hpp"
#include "aaj/laurent.hpp"
#include "aaj/report.hpp"

namespace aaj::cli {

namespace fs = std::filesystem;

namespace {

struct Flags {
  bool json = false;
  int cap = kDefaultCap;
  std::string reverse;
  bool check = false;
  int parallel = 1;
  std::string cache_dir;
  bool timing = false;
};

// ---- input ------------------------------------------------------------------

std::string read_input(const std::string& arg) {
  if (arg == "-") {
    std::ostringstream s;
    s << std::cin.rdbuf();
    return s.str();
  }
  std::error_code ec;
  if (fs::is_regular_file(arg, ec)) {
    std::ifstream in(arg);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
  }
  return arg;
}

LinkDiagram load_diagram(const std::string& arg, const Flags& f) {
  std::string text = read_input(arg);
  if (!f.reverse.empty()) text += " reverse=" + f.reverse;
  return parse_pd(text);
}

// ---- cache ------------------------------------------------------------------

class BracketCache {
 public:
  explicit BracketCache(const std::string& dir) {
    if (dir.empty()) return;
    fs::create_directories(dir);
    file_ = fs::path(dir) / "aaj-cache.jsonl";
    std::ifstream in(file_);
    std::string line;
    while (std::getline(in, line)) {
      const Json j = Json::parse(line, nullptr, false);
      if (j.is_discarded() || !j.is_object()) continue;
      if (j.value("version", "") != AAJ_VERSION) continue;
      entries_[j.value("key", "")] = j.value("bracket", "");
    }
  }

  LaurentPoly bracket(const LinkDiagram& d, const BracketOptions& opt) {
    if (file_.empty()) return aaj::bracket(d, opt);
    const std::string key = serialize(d);
    {
      std::lock_guard<std::mutex> lock(mu_);
      auto it = entries_.find(key);
      if (it != entries_.end()) return parse_poly(it->second, Unit::QuarterA);
    }
    LaurentPoly b = aaj::bracket(d, opt);
    std::lock_guard<std::mutex> lock(mu_);
    const std::string text = to_string(b);
    if (entries_.emplace(key, text).second) {
      std::ofstream out(file_, std::ios::app);
      out << Json{{"key", key}, {"version", AAJ_VERSION}, {"bracket", text}}.dump() << '\n';
    }
    return b;
  }

 private:
  fs::path file_;
  std::map<std::string, std::string> entries_;
  std::mutex mu_;
};

// ---- errors -----------------------------------------------------------------

int exit_code_for(const Error& e) {
  return dynamic_cast<const CapError*>(&e) ? kCapExceeded : kInputError;
}

Json error_json(const std::string& kind, const std::string& message) {
  return {{"error", {{"kind", kind}, {"message", message}}}};
}

int report_error(const Error& e, const Flags& f, std::ostream& out, std::ostream& err) {
  if (f.json)
    out << error_json(e.kind(), e.what()).dump() << '\n';
  else
    err << "error: " << e.kind() << ": " << e.what() << '\n';
  return exit_code_for(e);
}

BracketOptions options(const Flags& f) {
  BracketOptions o;
  o.cap = f.cap;
  o.threads = std::max(1, f.parallel);
  return o;
}

double elapsed_ms(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

// ---- commands ---------------------------------------------------------------

int cmd_jones(const std::string& input, const Flags& f, std::ostream& out) {
  const auto t0 = std::chrono::steady_clock::now();
  const LinkDiagram d = load_diagram(input, f);
  BracketCache cache(f.cache_dir);
  const LaurentPoly br = cache.bracket(d, options(f));
  const LaurentPoly v = jones_from_bracket(br, writhe(d));
  if (f.json) {
    Json j = {{"pd", serialize(d)},          {"crossings", d.crossing_count()},
              {"components", d.link_component_count()}, {"writhe", writhe(d)},
              {"bracket", to_string(br)},    {"jones", to_string(v)},
              {"version", AAJ_VERSION}};
    if (f.timing) j["elapsed_ms"] = elapsed_ms(t0);
    out << j.dump() << '\n';
  } else {
    out << "bracket: " << to_string(br) << '\n' << "jones: " << to_string(v) << '\n';
    if (f.timing) out << "elapsed_ms: " << elapsed_ms(t0) << '\n';
  }
  return kOk;
}

void print_stats(std::ostream& out, const char* name, const GraphStats& g, const AAPathStats& p) {
  out << name << ": v=" << g.v << " e=" << g.e << " mu=" << g.mu << " tau=" << g.tau << " beta1=" << g.beta1
      << " P=" << p.P << " P0=" << p.P0 << " P1=" << p.P1 << " P2=" << p.P2 << " Q=" << p.Q << " S=" << p.S
      << '\n';
}

const char* minimality_note(Minimality m) {
  switch (m) {
    case Minimality::Minimal:
      return "fewest crossings among almost alternating diagrams of this link";
    case Minimality::WithinOneCrossing:
      return "an almost alternating diagram of this link needs at least c-1 crossings";
    case Minimality::ReducibleByTwo:
      return "the link has an almost alternating diagram with two fewer crossings (not constructed)";
    case Minimality::Inconclusive:
      return "no minimality statement for this diagram";
  }
  return "";
}

int cmd_aa(const std::string& input, const Flags& f, std::ostream& out) {
  const LinkDiagram d = load_diagram(input, f);
  if (!d.is_connected_nontrivial()) throw SplitError("aa needs a connected diagram with crossings");
  Json j = {{"pd", serialize(d)}, {"crossings", d.crossing_count()}, {"version", AAJ_VERSION}};
  int code;
  std::optional<AAReport> report;
  std::string jones_text;
  if (is_alternating(d)) {
    j["classification"] = "alternating";
    code = kAlternating;
  } else {
    const auto certs = find_dealternators(d);
    Json jc = Json::array();
    for (const auto& c : certs) jc.push_back(to_json(c));
    j["dealternators"] = jc;
    auto it = std::find_if(certs.begin(), certs.end(), [](const DealternatorCert& c) { return c.strongly_reduced; });
    if (certs.empty()) {
      j["classification"] = "not_almost_alternating_diagram";
      code = kNotAlmostAlternating;
    } else if (it == certs.end()) {
      j["classification"] = "almost_alternating_not_strongly_reduced";
      code = kAlmostAlternatingNotStronglyReduced;
    } else {
      BracketCache cache(f.cache_dir);
      const LaurentPoly br = cache.bracket(d, options(f));
      const LaurentPoly v = jones_from_bracket(br, writhe(d));
      AAReport r = aa_coefficients(d, *it);
      r.sign_verdict = sign_obstruction(v);
      r.nontriviality = is_unit_times_unlink(v, d.link_component_count()) ? Nontriviality::Violation
                                                                             : Nontriviality::NontrivialJones;
      j["classification"] = "almost_alternating_strongly_reduced";
      j["report"] = to_json(r);
      jones_text = to_string(v);
      j["jones"] = jones_text;
      report = r;
      code = kOk;
    }
  }
  if (f.json) {
    out << j.dump() << '\n';
    return code;
  }
  out << "diagram: " << j["classification"].get<std::string>() << '\n';
  if (j.contains("dealternators"))
    for (const auto& c : j["dealternators"])
      out << "dealternator: crossing " << c["crossing"].get<int>()
          << (c["strongly_reduced"].get<bool>() ? " (strongly reduced)"
                                                : " (" + c["reason"].get<std::string>() + ")")
          << '\n';
  if (report) {
    const AAReport& r = *report;
    out << "alphas: " << r.alpha0 << ' ' << r.alpha1 << ' ' << r.alpha_cm4 << ' ' << r.alpha_cm3 << '\n';
    out << "window: A^" << r.bottom_exponent << " .. A^" << r.top_exponent << '\n';
    print_stats(out, "G", r.stats, r.path);
    print_stats(out, "Gbar", r.stats_bar, r.path_bar);
    out << "minimality: " << to_string(r.minimality) << " (" << minimality_note(r.minimality) << ")\n";
    out << "sign: " << to_string(*r.sign_verdict) << '\n';
    out << "jones nontriviality: " << to_string(*r.nontriviality) << '\n';
    out << "jones: " << jones_text << '\n';
  }
  return code;
}

int cmd_tait(const std::string& input, const Flags& f, std::ostream& out) {
  const LinkDiagram d = load_diagram(input, f);
  const auto [g, gbar] = tait_graphs(d);
  const GraphStats sg = graph_stats(simplify(g)), sb = graph_stats(simplify(gbar));
  if (f.json) {
    out << Json{{"G", {{"dump", dump(g)}, {"stats", to_json(sg)}}},
                {"Gbar", {{"dump", dump(gbar)}, {"stats", to_json(sb)}}}}
               .dump()
        << '\n';
  } else {
    out << "G " << dump(g) << "Gbar " << dump(gbar);
    out << "G: v=" << sg.v << " e=" << sg.e << " mu=" << sg.mu << " tau=" << sg.tau << " beta1=" << sg.beta1 << '\n';
    out << "Gbar: v=" << sb.v << " e=" << sb.e << " mu=" << sb.mu << " tau=" << sb.tau << " beta1=" << sb.beta1
        << '\n';
  }
  return kOk;
}

int cmd_turaev(const std::string& input, const Flags& f, std::ostream& out) {
  const LinkDiagram d = load_diagram(input, f);
  const auto [sa, sb] = state_counts(d);
  const int g = turaev_genus(d);
  const bool aa = is_A_adequate(d), ba = is_B_adequate(d);
  if (f.json)
    out << Json{{"s_A", sa}, {"s_B", sb}, {"turaev_genus", g}, {"A_adequate", aa}, {"B_adequate", ba}}.dump()
        << '\n';
  else
    out << "s_A: " << sa << "\ns_B: " << sb << "\nturaev_genus: " << g << "\nA_adequate: " << std::boolalpha
        << aa << "\nB_adequate: " << ba << '\n';
  return kOk;
}

// ---- batch ------------------------------------------------------------------

std::vector<std::vector<std::string>> parse_csv(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> row;
  std::string field;
  bool quoted = false, any = false;
  std::size_t i = 0;
  if (text.rfind("\xEF\xBB\xBF", 0) == 0) i = 3;
  for (; i < text.size(); ++i) {
    const char ch = text[i];
    if (quoted) {
      if (ch == '"') {
        if (i + 1 < text.size() && text[i + 1] == '"') {
          field += '"';
          ++i;
        } else {
          quoted = false;
        }
      } else {
        field += ch;
      }
      continue;
    }
    if (ch == '"') {
      quoted = true;
      any = true;
    } else if (ch == ',') {
      row.push_back(field);
      field.clear();
      any = true;
    } else if (ch == '\n' || ch == '\r') {
      if (ch == '\r' && i + 1 < text.size() && text[i + 1] == '\n') ++i;
      if (any || !field.empty()) {
        row.push_back(field);
        rows.push_back(row);
      }
      row.clear();
      field.clear();
      any = false;
    } else {
      field += ch;
      any = true;
    }
  }
  if (quoted) throw ParseError("unterminated quote in CSV");
  if (any || !field.empty()) {
    row.push_back(field);
    rows.push_back(row);
  }
  return rows;
}

struct BatchRecord {
  std::string name, pd, expected_jones;
  std::vector<std::string> tags;
};

struct BatchResult {
  Json line;
  bool error = false;
  bool check_failed = false;
};

BatchResult run_record(const BatchRecord& rec, const Flags& f, BracketCache& cache) {
  BatchResult res;
  Json j;
  j["name"] = rec.name;
  if (!rec.tags.empty()) j["tags"] = rec.tags;
  try {
    const auto t0 = std::chrono::steady_clock::now();
    const LinkDiagram d = parse_pd(rec.pd);
    BracketOptions opt;
    opt.cap = f.cap;
    const LaurentPoly br = cache.bracket(d, opt);
    j["result"] = diagram_report(d, br);
    if (f.check && !rec.expected_jones.empty()) {
      const LaurentPoly want = parse_poly(rec.expected_jones, Unit::HalfT);
      const bool pass = want == jones_from_bracket(br, writhe(d));
      j["check"] = pass ? "pass" : "fail";
      res.check_failed = !pass;
    }
    if (f.timing) j["elapsed_ms"] = elapsed_ms(t0);
  } catch (const Error& e) {
    j["error"] = error_json(e.kind(), e.what())["error"];
    res.error = true;
  }
  j["version"] = AAJ_VERSION;
  res.line = j;
  return res;
}

int cmd_batch(const std::string& path, const Flags& f, std::ostream& out, std::ostream& err) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open CSV file " + path);
  std::ostringstream s;
  s << in.rdbuf();
  const auto rows = parse_csv(s.str());
  if (rows.empty()) return kOk;
  const auto& header = rows[0];
  auto column = [&](const std::string& name) -> int {
    auto it = std::find(header.begin(), header.end(), name);
    return it == header.end() ? -1 : static_cast<int>(it - header.begin());
  };
  const int c_name = column("name"), c_pd = column("pd"), c_exp = column("expected_jones"), c_tags = column("tags");
  if (c_name < 0 || c_pd < 0) throw ParseError("CSV header needs columns name and pd");
  auto cell = [](const std::vector<std::string>& row, int col) {
    return col >= 0 && col < static_cast<int>(row.size()) ? row[static_cast<std::size_t>(col)] : std::string();
  };

  std::vector<BatchRecord> records;
  for (std::size_t r = 1; r < rows.size(); ++r) {
    BatchRecord rec{cell(rows[r], c_name), cell(rows[r], c_pd), cell(rows[r], c_exp), {}};
    std::stringstream tags(cell(rows[r], c_tags));
    for (std::string t; std::getline(tags, t, ';');)
      if (!t.empty()) rec.tags.push_back(t);
    records.push_back(rec);
  }

  BracketCache cache(f.cache_dir);
  std::vector<BatchResult> results(records.size());
  std::map<std::string, int> seen;
  std::vector<char> duplicate(records.size(), 0);
  for (std::size_t k = 0; k < records.size(); ++k)
    if (seen[records[k].name]++) duplicate[k] = 1;

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k = next++; k < records.size(); k = next++) {
      if (duplicate[k]) {
        Json j = {{"name", records[k].name}, {"version", AAJ_VERSION}};
        j["error"] = error_json("ValidationError", "duplicate record name")["error"];
        results[k] = {j, true, false};
        continue;
      }
      results[k] = run_record(records[k], f, cache);
    }
  };
  const int workers = std::max(1, std::min<int>(f.parallel, static_cast<int>(records.size())));
  if (workers == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  bool any_error = false, any_fail = false;
  for (const auto& r : results) {
    out << r.line.dump() << '\n';
    any_error |= r.error;
    any_fail |= r.check_failed;
  }
  if (any_fail) err << "check failed for at least one record\n";
  return any_fail ? kCheckFailed : any_error ? kInputError : kOk;
}

// ---- families -----------------------------------------------------------------

std::vector<FamilyParams> default_settings(int id) {
  auto p = [](std::vector<int> av, std::vector<int> bv, int a, int b, int c) {
    FamilyParams q;
    q.a_vec = std::move(av);
    q.b_vec = std::move(bv);
    q.a = a;
    q.b = b;
    q.c = c;
    return q;
  };
  switch (id) {
    case 1:
    case 2:
    case 3:
      return {p({1}, {1}, 1, 1, 1), p({2, 1}, {1, 3}, 1, 1, 2), p({1, 2, 1}, {2, 1, 1}, 1, 1, 3)};
    case 4: return {p({}, {}, 2, 1, 1), p({}, {}, 3, 1, 1), p({}, {}, 5, 1, 1)};
    case 5: return {p({1, 1}, {}, 1, 1, 1), p({2, 1}, {}, 1, 1, 1), p({1, 3, 1}, {}, 1, 1, 1)};
    case 6: return {p({}, {}, 1, 2, 1), p({}, {}, 2, 3, 1), p({}, {}, 3, 2, 1)};
    default: return {p({}, {1, 1}, 1, 1, 1), p({}, {1, 2}, 2, 1, 1), p({}, {2, 1, 1}, 1, 1, 1)};
  }
}

int cmd_families(int only, const Flags& f, std::ostream& out) {
  bool all_hold = true;
  for (int id = 1; id <= 7; ++id) {
    if (only && id != only) continue;
    for (const auto& params : default_settings(id)) {
      const FamilyGraph g = family_graph(id, params);
      const FamilyCheck chk = family_check(g);
      all_hold &= chk.holds;
      if (f.json) {
        Json j = to_json(g);
        j["stats_bar"] = merged_stats(chk.stats, chk.path);
        j["equations_hold"] = chk.holds;
        out << j.dump() << '\n';
      } else {
        out << "family " << id << ' ' << to_json(g)["params"].dump() << ": ";
        out << "v=" << chk.stats.v << " e=" << chk.stats.e << " beta1=" << chk.stats.beta1 << " P=" << chk.path.P
            << " P0=" << chk.path.P0 << " Q=" << chk.path.Q << " S=" << chk.path.S
            << (chk.holds ? "  ok" : "  FAILS") << '\n';
      }
    }
  }
  return all_hold ? kOk : kCheckFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Kauffman bracket, Jones polynomial and almost alternating diagram analysis"};
  app.set_version_flag("--version", AAJ_VERSION);
  app.require_subcommand(1);
  Flags f;
  std::string input;
  int family_id = 0;

  auto common = [&](CLI::App* sub, bool pd_input) {
    if (pd_input) sub->add_option("input", input, "PD text, a file containing it, or - for stdin")->required();
    sub->add_flag("--json", f.json, "JSON output");
    sub->add_option("--cap", f.cap, "largest crossing count for the state sum")->check(CLI::Range(0, 40));
    sub->add_option("--parallel", f.parallel, "worker threads")->check(CLI::Range(1, 256));
    sub->add_flag("--timing", f.timing, "include elapsed time in the output");
  };
  auto* jones_cmd = app.add_subcommand("jones", "bracket and Jones polynomial");
  common(jones_cmd, true);
  jones_cmd->add_option("--reverse", f.reverse, "comma separated component indices to reverse");
  jones_cmd->add_option("--cache", f.cache_dir, "cache directory");
  auto* aa_cmd = app.add_subcommand("aa", "almost alternating analysis");
  common(aa_cmd, true);
  aa_cmd->add_option("--reverse", f.reverse, "comma separated component indices to reverse");
  aa_cmd->add_option("--cache", f.cache_dir, "cache directory");
  auto* tait_cmd = app.add_subcommand("tait", "checkerboard graphs");
  common(tait_cmd, true);
  auto* turaev_cmd = app.add_subcommand("turaev", "extreme states and Turaev genus");
  common(turaev_cmd, true);
  turaev_cmd->add_option("--reverse", f.reverse, "comma separated component indices to reverse");
  auto* batch_cmd = app.add_subcommand("batch", "process a CSV of diagrams");
  common(batch_cmd, true);
  batch_cmd->add_flag("--check", f.check, "compare against expected_jones");
  batch_cmd->add_option("--cache", f.cache_dir, "cache directory");
  auto* fam_cmd = app.add_subcommand("families", "family graph statistics");
  common(fam_cmd, false);
  fam_cmd->add_option("--id", family_id, "only this family")->check(CLI::Range(1, 7));

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (jones_cmd->parsed()) return cmd_jones(input, f, out);
    if (aa_cmd->parsed()) return cmd_aa(input, f, out);
    if (tait_cmd->parsed()) return cmd_tait(input, f, out);
    if (turaev_cmd->parsed()) return cmd_turaev(input, f, out);
    if (batch_cmd->parsed()) return cmd_batch(input, f, out, err);
    if (fam_cmd->parsed()) return cmd_families(family_id, f, out);
  } catch (const Error& e) {
    return report_error(e, f, out, err);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
  return kInputError;
}

}  // namespace aaj::cli
