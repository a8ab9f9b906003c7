#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <limits>
#include <sstream>
#include <string>

#include "wreg/document.hpp"

namespace {

using namespace wreg;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DocumentError("cannot open file: " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

std::vector<long long> parse_weight_list(const std::string& text) {
  std::vector<long long> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) throw DocumentError("empty entry in weight list");
    std::size_t used = 0;
    long long v = std::stoll(item, &used);
    if (used != item.size()) throw DocumentError("bad weight entry: " + item);
    out.push_back(v);
  }
  if (out.empty()) throw DocumentError("empty weight list");
  return out;
}

std::pair<long long, long long> parse_range(const std::string& text) {
  auto sep = text.find("..");
  if (sep == std::string::npos) throw DocumentError("twist range must look like MIN..MAX");
  std::size_t used = 0;
  long long lo = std::stoll(text.substr(0, sep), &used);
  if (used != sep) throw DocumentError("bad range start");
  std::string rest = text.substr(sep + 2);
  long long hi = std::stoll(rest, &used);
  if (used != rest.size()) throw DocumentError("bad range end");
  return {lo, hi};
}

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

Json crosscheck_json(const SheafExpr& e, const std::vector<long long>& twists,
                     const std::vector<std::uint64_t>& primes, const Options& opts) {
  Json out;
  out["primes"] = primes;
  bool ok = true;
  for (long long t : twists)
    if (!oracle_rank_crosscheck(e, t, primes, opts)) ok = false;
  out["ok"] = ok;
  return out;
}

int run(int argc, char** argv) {
  CLI::App app{"Exact sheaf cohomology and weighted regularity on weighted projective spaces"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand

  Options opts;
  std::vector<std::uint64_t> primes;
  app.add_option("--prime", primes, "prime for modular rank cross-checks (repeatable)");
  app.add_option("--seed", opts.seed, "seed for randomized certificates");
  app.add_option("--window-cap", opts.window_cap, "cap for stabilization-window searches");
  app.add_flag("--strict", opts.strict, "treat unverified certificates as errors");

  // cohom
  auto* cohom_cmd = app.add_subcommand("cohom", "cohomology table over a twist range");
  std::string cohom_file, cohom_range, cohom_format = "json";
  cohom_cmd->add_option("file", cohom_file)->required();
  cohom_cmd->add_option("--twists", cohom_range, "twist range MIN..MAX")->required();
  cohom_cmd->add_option("--format", cohom_format)->check(CLI::IsMember({"json", "csv"}));

  // wreg
  auto* wreg_cmd = app.add_subcommand("wreg", "minimal wregularity");
  std::string wreg_file;
  wreg_cmd->add_option("file", wreg_file)->required();

  // check-wreg / check-semiwreg / check-toric
  struct CheckCmd {
    CLI::App* cmd;
    std::string file;
    long long m = 0;
  };
  CheckCmd cw{app.add_subcommand("check-wreg", "test m-wregularity"), {}, 0};
  CheckCmd cs{app.add_subcommand("check-semiwreg", "test m-semiwregularity"), {}, 0};
  CheckCmd ct{app.add_subcommand("check-toric", "test m-toric regularity"), {}, 0};
  for (CheckCmd* c : {&cw, &cs, &ct}) {
    c->cmd->add_option("file", c->file)->required();
    c->cmd->add_option("-m", c->m)->required();
  }

  // wgg
  auto* wgg_cmd = app.add_subcommand("wgg", "weighted global generation of a split sheaf");
  std::string wgg_file;
  wgg_cmd->add_option("file", wgg_file)->required();

  // gg
  auto* gg_cmd = app.add_subcommand("gg", "classical global generation of O(m)");
  std::string gg_weights;
  long long gg_m = 0;
  gg_cmd->add_option("--weights", gg_weights, "weights, e.g. 5,3,2")->required();
  gg_cmd->add_option("-m", gg_m)->required();

  // koszul
  auto* koszul_cmd = app.add_subcommand("koszul", "Koszul complex twists");
  std::string koszul_weights;
  koszul_cmd->add_option("--weights", koszul_weights)->required();

  // monad-bound
  auto* mb_cmd = app.add_subcommand("monad-bound", "quasi-linear wregularity bound");
  std::string mb_file;
  mb_cmd->add_option("file", mb_file)->required();

  // pullback-reg
  auto* pb_cmd = app.add_subcommand("pullback-reg", "pullback regularity report");
  std::string pb_file;
  long long pb_m = 0;
  pb_cmd->add_option("file", pb_file)->required();
  pb_cmd->add_option("-m", pb_m)->required();

  // restrict
  auto* rs_cmd = app.add_subcommand("restrict", "restriction to a coordinate hyperplane");
  std::string rs_file;
  int rs_j = 0;
  long long rs_m = 0;
  bool rs_has_m = false;
  rs_cmd->add_option("file", rs_file)->required();
  rs_cmd->add_option("-j", rs_j, "coordinate index")->required();
  auto* rs_m_opt = rs_cmd->add_option("-m", rs_m, "also report semiwregularity at this m");
  rs_cmd->callback([&] { rs_has_m = rs_m_opt->count() > 0; });

  // h1-gens
  auto* h1_cmd = app.add_subcommand("h1-gens", "generator degrees of the H^1 module");
  std::string h1_file;
  h1_cmd->add_option("file", h1_file)->required();

  // horrocks-shape
  auto* hs_cmd = app.add_subcommand("horrocks-shape", "end-term twists of the minimal monad");
  std::string hs_file;
  long long hs_l = 0, hs_l_dual = 0;
  bool hs_has_l = false, hs_has_ld = false;
  hs_cmd->add_option("file", hs_file)->required();
  auto* hs_l_opt = hs_cmd->add_option("-l", hs_l, "lowest generator degree kept");
  auto* hs_ld_opt = hs_cmd->add_option("--l-dual", hs_l_dual, "same for the dual side");
  hs_cmd->callback([&] {
    hs_has_l = hs_l_opt->count() > 0;
    hs_has_ld = hs_ld_opt->count() > 0;
  });

  // verify-paper
  auto* vp_cmd = app.add_subcommand("verify-paper", "reproduce the published worked examples");
  std::string vp_format = "text";
  vp_cmd->add_option("--format", vp_format)->check(CLI::IsMember({"text", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& err) {
    return app.exit(err) == 0 ? 0 : 2;
  }

  if (cohom_cmd->parsed()) {
    SheafExpr e = parse_document_text(read_file(cohom_file));
    auto [lo, hi] = parse_range(cohom_range);
    CohomologyTable tab = cohomology_table(e, lo, hi, opts);
    if (!primes.empty()) {
      std::vector<long long> twists;
      for (long long t = lo; t <= hi; ++t) twists.push_back(t);
      Json check = crosscheck_json(e, twists, primes, opts);
      if (!check["ok"].get<bool>()) throw Error("modular rank cross-check failed");
      std::cerr << "modular cross-check ok at " << primes.size() << " prime(s)\n";
    }
    if (cohom_format == "csv")
      std::cout << to_csv(tab);
    else
      emit(to_json(tab));
    return 0;
  }
  if (wreg_cmd->parsed()) {
    SheafExpr e = parse_document_text(read_file(wreg_file));
    long long m = wreg_min(e, opts);
    Json out;
    out["wreg"] = m;
    out["report"] = to_json(is_wregular(e, m, opts));
    emit(out);
    return 0;
  }
  for (CheckCmd* c : {&cw, &cs, &ct}) {
    if (!c->cmd->parsed()) continue;
    SheafExpr e = parse_document_text(read_file(c->file));
    RegularityReport rep = (c == &cw)   ? is_wregular(e, c->m, opts)
                           : (c == &cs) ? is_semiwregular(e, c->m, opts)
                                        : is_toric_regular(e, c->m, opts);
    if (!primes.empty()) {
      Json check = crosscheck_json(e, {(c->m + 1) * e.weights().k}, primes, opts);
      std::cerr << "modular cross-check " << (check["ok"].get<bool>() ? "ok" : "FAILED") << "\n";
    }
    emit(to_json(rep));
    return 0;
  }
  if (wgg_cmd->parsed()) {
    SheafExpr e = parse_document_text(read_file(wgg_file));
    emit(to_json(wgg_split(e, opts)));
    return 0;
  }
  if (gg_cmd->parsed()) {
    Weights w = weight_data(parse_weight_list(gg_weights));
    emit(to_json(gg_line(w, gg_m, opts)));
    return 0;
  }
  if (koszul_cmd->parsed()) {
    Weights w = weight_data(parse_weight_list(koszul_weights));
    Json out = Json::array();
    for (const auto& term : koszul_complex(w)) {
      Json t = Json::array();
      for (long long d : term.twists) t.push_back(d);
      out.push_back(std::move(t));
    }
    std::cout << out.dump() << "\n";
    return 0;
  }
  if (mb_cmd->parsed()) {
    SheafExpr e = parse_document_text(read_file(mb_file));
    if (e.monad_leaves().size() != 1 || !e.split_twists().empty() ||
        e.monad_leaves()[0].shift != 0)
      throw DocumentError("monad-bound needs a document whose sheaf is a single monad");
    MonadBoundReport rep = monad_bound(*e.monad_leaves()[0].monad, opts);
    if (!primes.empty()) {
      Json check = crosscheck_json(e, {(rep.m + 1) * e.weights().k}, primes, opts);
      std::cerr << "modular cross-check " << (check["ok"].get<bool>() ? "ok" : "FAILED") << "\n";
    }
    emit(to_json(rep));
    return 0;
  }
  if (pb_cmd->parsed()) {
    SheafExpr e = parse_document_text(read_file(pb_file));
    emit(to_json(pullback_reg_report(e, pb_m, opts)));
    return 0;
  }
  if (rs_cmd->parsed()) {
    SheafExpr e = parse_document_text(read_file(rs_file));
    if (rs_has_m) {
      RestrictReport rep = restrict_semiwreg_report(e, rs_j, rs_m, opts);
      Json out;
      out["document"] = serialize_document(restrict_hyperplane(e, rs_j, opts));
      out["restriction"] = to_json(rep);
      emit(out);
    } else {
      emit(serialize_document(restrict_hyperplane(e, rs_j, opts)));
    }
    return 0;
  }
  if (h1_cmd->parsed()) {
    SheafExpr e = parse_document_text(read_file(h1_file));
    Json out;
    out["generators"] = h1_module_gens(e, opts);
    emit(out);
    return 0;
  }
  if (hs_cmd->parsed()) {
    SheafExpr e = parse_document_text(read_file(hs_file));
    // default cutoffs keep every generator
    long long lo = hs_has_l ? hs_l : std::numeric_limits<long long>::min() / 4;
    long long lo_dual = hs_has_ld ? hs_l_dual : std::numeric_limits<long long>::min() / 4;
    for (const auto& leaf : e.monad_leaves())
      if (validate_monad(*leaf.monad, opts).pointwise_bundle != Cert::proven)
        std::cerr << "warning: fiberwise bundle certificate unverified; the dual-side "
                     "generator degrees assume the homology is a bundle\n";
    emit(to_json(horrocks_shape(e, lo, lo_dual, opts)));
    return 0;
  }
  if (vp_cmd->parsed()) {
    VerificationReport rep = verify_paper(opts);
    if (vp_format == "json") {
      emit(to_json(rep));
    } else {
      for (const auto& c : rep.checks)
        std::cout << "[" << (c.agreement == "match" ? "ok" : c.agreement) << "] " << c.name
                  << ": expected " << c.expected << ", engine " << c.engine << "\n";
      std::cout << rep.checks.size() << " checks, " << rep.mismatches() << " mismatches, "
                << rep.paper_inconsistencies() << " paper-inconsistent\n";
    }
    return 0;
  }
  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const wreg::StrictUnverified& err) {
    std::cerr << "error: " << err.what() << "\n";
    return 4;
  } catch (const wreg::WindowExceeded& err) {
    std::cerr << "error: " << err.what() << "\n";
    return 3;
  } catch (const wreg::NoWregularTwist& err) {
    std::cerr << "error: " << err.what() << "\n";
    return 3;
  } catch (const wreg::Error& err) {
    std::cerr << "error: " << err.what() << "\n";
    return 2;
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << "\n";
    return 2;
  }
}
