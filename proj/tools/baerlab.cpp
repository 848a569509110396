// baerlab: batch front door for the Baer-invariant laboratory.
//
// Subcommands parse input files, run one pipeline each and print a
// deterministic machine-readable report (JSON by default, TSV with
// --format tsv).  Exit codes: 0 success, 2 mathematical violation detected,
// 3 cap exceeded, 4 parse error.

#include <CLI11.hpp>

#include <chrono>
#include <iostream>

#include "baerlab/catalog.hpp"
#include "baerlab/io.hpp"

using namespace baerlab;
using io::Json;

namespace {

struct Options {
  std::string variety = "abelian";
  int max_order = 64;
  int trunc = 4;
  int max_cosets = 100000;
  long long seed = 20240817;
  bool strict = false;
  bool timing = false;
  std::string format = "json";
  int bar_max_order = 8;
};

grp::VarietySpec parse_variety(const std::string& s) {
  if (s == "abelian") return grp::VarietySpec::abelian();
  for (const std::string& prefix : {std::string("burnside-q:"), std::string("burnside-"),
                                    std::string("burnside:")}) {
    if (s.rfind(prefix, 0) == 0)
      return grp::VarietySpec::abelian_exp_q(std::stoll(s.substr(prefix.size())));
  }
  for (const std::string& prefix : {std::string("nilpotent:"), std::string("nilpotent-")}) {
    if (s.rfind(prefix, 0) == 0)
      return grp::VarietySpec::nilpotent_c(std::stoll(s.substr(prefix.size())));
  }
  throw BaerError(Errc::ParseError,
                  "unknown variety '" + s +
                      "' (use abelian, burnside-q:<q> or nilpotent:<c>)");
}

int exit_code_for(Errc c) {
  switch (c) {
    case Errc::ParseError: return 4;
    case Errc::SizeCapExceeded:
    case Errc::LimitExceeded: return 3;
    default: return 2;
  }
}

Json options_json(const Options& o) {
  Json j;
  j["variety"] = o.variety;
  j["max_order"] = o.max_order;
  j["trunc"] = o.trunc;
  j["max_cosets"] = o.max_cosets;
  j["seed"] = o.seed;
  j["strict"] = o.strict;
  j["format"] = o.format;
  return j;
}

mult::BarCaps bar_caps(const Options& o) {
  // bar models default to |G| <= 8; --max-order raises both caps together
  return mult::BarCaps{std::max(o.bar_max_order, std::min(o.max_order, 64)), o.trunc};
}

void emit(const Options& o, Json& report, int code,
          std::chrono::steady_clock::time_point start) {
  if (o.timing) {
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - start)
                  .count();
    report["timing_ms"] = ms;
  } else {
    report["timing_ms"] = nullptr;
  }
  if (o.format == "tsv")
    std::cout << io::to_tsv(report);
  else
    std::cout << report.dump(2) << "\n";
  std::exit(code);
}

int violations_code(const Json& report) {
  return report.contains("violations") && !report["violations"].empty() ? 2 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"baerlab: Baer invariants of groups, pairs and triples at desk scale"};
  app.require_subcommand(1);

  Options opt;
  app.add_option("--variety", opt.variety,
                 "variety: abelian | burnside-q:<q> | nilpotent:<c>");
  CLI::Option* max_order_opt =
      app.add_option("--max-order", opt.max_order, "finite group table cap");
  app.add_option("--trunc", opt.trunc, "simplicial truncation level");
  app.add_option("--max-cosets", opt.max_cosets, "Todd-Coxeter coset cap");
  app.add_option("--seed", opt.seed, "seed echoed into reports");
  app.add_flag("--strict", opt.strict, "reject asserted torsion hypotheses");
  app.add_flag("--timing", opt.timing, "include wall-clock timing in reports");
  app.add_option("--format", opt.format, "output format: json | tsv")
      ->check(CLI::IsMember({"json", "tsv"}));

  std::string file1, file2;
  int degree = 2;
  long long witt_n = 0, witt_c = 1;

  CLI::App* homology = app.add_subcommand("homology", "H_n of a group file");
  homology->fallthrough();
  homology->add_option("file", file1)->required();
  homology->add_option("--degree", degree, "homology degree");

  CLI::App* multiplier =
      app.add_subcommand("multiplier", "Baer invariant of a pair or triple file");
  multiplier->fallthrough();
  multiplier->add_option("file", file1)->required();

  CLI::App* les = app.add_subcommand("les", "long exact sequences of a pair or triple");
  les->fallthrough();
  les->add_option("file", file1)->required();

  CLI::App* freeprod =
      app.add_subcommand("freeprod", "free-product multiplier of two triples");
  freeprod->fallthrough();
  freeprod->add_option("file1", file1)->required();
  freeprod->add_option("file2", file2)->required();

  CLI::App* colimit = app.add_subcommand("colimit", "colimit of a directed system");
  colimit->fallthrough();
  colimit->add_option("file", file1)->required();

  CLI::App* scheck =
      app.add_subcommand("simplicial-check", "verify simplicial identities");
  scheck->fallthrough();
  scheck->add_option("file", file1)->required();

  CLI::App* witt = app.add_subcommand("witt", "multiplier of a free abelian group");
  witt->fallthrough();
  witt->add_option("n", witt_n)->required();
  witt->add_option("c", witt_c)->required();

  CLI::App* certify = app.add_subcommand("certify-torsion", "torsion certificate");
  certify->fallthrough();
  certify->add_option("file", file1)->required();

  CLI::App* solveseq = app.add_subcommand("solve-seq", "verify and solve a sequence");
  solveseq->fallthrough();
  solveseq->add_option("file", file1)->required();

  CLI11_PARSE(app, argc, argv);
  auto start = std::chrono::steady_clock::now();
  // bar models stay capped at |G| <= 8 unless --max-order raises them
  if (max_order_opt->count() > 0) opt.bar_max_order = opt.max_order;

  Json report;
  report["format"] = 1;
  report["command"] = app.get_subcommands().front()->get_name();
  report["options"] = options_json(opt);
  report["violations"] = Json::array();

  try {
    grp::VarietySpec v = parse_variety(opt.variety);

    if (homology->parsed()) {
      io::GroupFile gf = io::parse_group_file(file1, opt.max_order, opt.max_cosets);
      report["inputs"] = {{"file", file1}, {"order", gf.group->order()},
                          {"degree", degree}};
      ab::FgAbGroup h = mult::homology_group(gf.group, degree, bar_caps(opt));
      Json res;
      res["group_order"] = gf.group->order();
      res["degree"] = degree;
      res["value"] = io::canon_json(h);
      res["method"] = "bar-model";
      res["provenance"] = "computed";
      report["results"] = std::move(res);
      emit(opt, report, 0, start);
    }

    if (multiplier->parsed()) {
      io::GroupFile gf = io::parse_group_file(file1, opt.max_order, opt.max_cosets);
      report["inputs"] = {{"file", file1}, {"order", gf.group->order()}};
      mult::MultiplierResult r;
      if (gf.m && gf.n) {
        grp::TripleInstance t(gf.group, *gf.m, *gf.n);
        if (v.kind == grp::VarietySpec::Kind::Abelian ||
            (v.kind == grp::VarietySpec::Kind::NilpotentC && v.param == 1)) {
          r = mult::triple_multiplier_bar(t, bar_caps(opt));
        } else {
          r.label = "VM(G,M,N)";
          r.method = mult::Method::Unknown;
          r.notes.push_back("no computable model for this variety; see les");
        }
      } else if (gf.n) {
        r = mult::relative_multiplier_bar(gf.group, *gf.n, bar_caps(opt));
      } else {
        throw BaerError(Errc::ParseError, "multiplier needs N = ... (and M = ... for a triple)");
      }
      report["results"] = io::multiplier_json(r);
      emit(opt, report, 0, start);
    }

    if (les->parsed()) {
      io::GroupFile gf = io::parse_group_file(file1, opt.max_order, opt.max_cosets);
      report["inputs"] = {{"file", file1}, {"order", gf.group->order()}};
      Json res;
      bool ok = true;
      if (gf.m && gf.n) {
        grp::TripleInstance t(gf.group, *gf.m, *gf.n);
        mult::TripleLes tl = mult::les_triple(t, v, bar_caps(opt));
        mult::LesReport ellis = mult::ellis_triple_tail(t);
        res["sequence_a"] = io::les_report_json(tl.seq_a);
        res["sequence_b"] = io::les_report_json(tl.seq_b);
        res["ellis_tail"] = io::les_report_json(ellis);
        ok = tl.seq_a.exact_ok && tl.seq_b.exact_ok && ellis.exact_ok;
      } else if (gf.n) {
        mult::LesReport pr = mult::les_pair(gf.group, *gf.n, v, bar_caps(opt));
        res["sequence"] = io::les_report_json(pr);
        ok = pr.exact_ok;
      } else {
        throw BaerError(Errc::ParseError, "les needs N = ... (and M = ... for a triple)");
      }
      report["results"] = std::move(res);
      if (!ok) report["violations"].push_back("inexact or mismatched slot detected");
      emit(opt, report, violations_code(report), start);
    }

    if (freeprod->parsed()) {
      io::GroupFile g1 = io::parse_group_file(file1, opt.max_order, opt.max_cosets);
      io::GroupFile g2 = io::parse_group_file(file2, opt.max_order, opt.max_cosets);
      if (!g1.m || !g1.n || !g2.m || !g2.n)
        throw BaerError(Errc::ParseError, "freeprod needs two triple files");
      grp::TripleInstance t1(g1.group, *g1.m, *g1.n);
      grp::TripleInstance t2(g2.group, *g2.m, *g2.n);
      report["inputs"] = {{"file1", file1}, {"file2", file2}};
      mult::MultiplierResult r = mult::freeprod_multiplier(t1, t2, v, bar_caps(opt));
      report["results"] = io::multiplier_json(r);
      emit(opt, report, 0, start);
    }

    if (colimit->parsed()) {
      io::SystemFile sf = io::parse_system_file(file1, opt.max_order, opt.max_cosets);
      report["inputs"] = {{"file", file1}};
      Json res;
      if (sf.abelian) {
        res["kind"] = "abelian-system";
        res["colimit"] = io::canon_json(ab::colimit(*sf.abelian));
        res["method"] = "coequalizer";
      } else {
        res["kind"] = "triple-system";
        mult::ColimitVerdict cv = mult::colimit_multiplier(*sf.triples, v, bar_caps(opt));
        res["lhs"] = io::canon_json(cv.lhs);
        res["rhs"] = io::canon_json(cv.rhs);
        res["verdict"] = cv.isomorphic ? "isomorphic" : "not-isomorphic";
        res["method"] = "bar-model";
        if (!cv.isomorphic)
          report["violations"].push_back("colimit comparison failed");
      }
      report["results"] = std::move(res);
      emit(opt, report, violations_code(report), start);
    }

    if (scheck->parsed()) {
      simp::TruncSimplicialAb x = io::parse_simplicial_json(file1);
      report["inputs"] = {{"file", file1}, {"trunc", x.T}};
      simp::IdentityReport rep = simp::check_simplicial_identities(x);
      Json res;
      res["ok"] = rep.ok;
      Json viol = Json::array();
      for (const auto& vio : rep.violations) viol.push_back(vio.describe());
      res["identity_violations"] = viol;
      Json levels = Json::array();
      for (const auto& lvl : x.levels) levels.push_back(io::canon_json(lvl));
      res["levels"] = std::move(levels);
      report["results"] = std::move(res);
      if (!rep.ok) report["violations"].push_back("simplicial identities violated");
      emit(opt, report, violations_code(report), start);
    }

    if (witt->parsed()) {
      report["inputs"] = {{"n", witt_n}, {"c", witt_c}};
      mult::MultiplierResult r = mult::witt_multiplier_result(witt_n, witt_c);
      report["results"] = io::multiplier_json(r);
      emit(opt, report, 0, start);
    }

    if (certify->parsed()) {
      mult::TorsionRequest req = io::parse_torsion_file(file1);
      report["inputs"] = {{"file", file1}};
      mult::TorsionOutcome out = mult::certify_torsion(req, opt.strict);
      Json res;
      res["emitted"] = out.emitted;
      if (out.emitted) {
        Json cert;
        cert["rule"] = out.certificate->rule;
        cert["conclusion"] = out.certificate->conclusion;
        cert["c_from"] = out.certificate->c_from;
        Json hs = Json::array();
        for (const auto& h : out.certificate->hypotheses) {
          Json hj;
          hj["name"] = h.name;
          hj["torsion"] = h.torsion;
          hj["provenance"] = h.provenance;
          hs.push_back(std::move(hj));
        }
        cert["hypotheses"] = std::move(hs);
        res["certificate"] = std::move(cert);
      } else {
        res["reason"] = out.reason;
      }
      report["results"] = std::move(res);
      emit(opt, report, 0, start);
    }

    if (solveseq->parsed()) {
      seq::ExactSeqInstance s = io::parse_sequence_json(file1);
      report["inputs"] = {{"file", file1}, {"terms", s.size()}};
      auto verdicts = seq::verify_exactness(s);
      Json res = io::sequence_json(s, verdicts);
      bool has_unknown = false;
      for (const auto& t : s.terms)
        if (!t.known()) has_unknown = true;
      if (has_unknown) {
        Json cons = Json::array();
        for (const auto& c : seq::solve_unknowns(s)) {
          Json cj;
          cj["index"] = c.index;
          cj["label"] = c.label;
          if (c.forced) cj["forced"] = io::canon_json(*c.forced);
          if (c.rank) cj["rank"] = *c.rank;
          if (c.order_divides) cj["order_divides"] = c.order_divides->str();
          if (c.order_multiple_of > 1)
            cj["order_multiple_of"] = c.order_multiple_of.str();
          if (!c.candidates.empty()) {
            Json cands = Json::array();
            for (const auto& x : c.candidates) cands.push_back(io::canon_json(x));
            cj["candidates"] = std::move(cands);
          }
          cons.push_back(std::move(cj));
        }
        res["constraints"] = std::move(cons);
      }
      report["results"] = std::move(res);
      for (const auto& vd : verdicts)
        if (vd.status == seq::SlotStatus::Inexact)
          report["violations"].push_back("inexact at slot " + std::to_string(vd.index));
      emit(opt, report, violations_code(report), start);
    }
  } catch (const BaerError& e) {
    report["error"] = {{"code", errc_name(e.code())}, {"message", e.what()}};
    emit(opt, report, exit_code_for(e.code()), start);
  } catch (const std::exception& e) {
    report["error"] = {{"code", "internal"}, {"message", e.what()}};
    emit(opt, report, 1, start);
  }
  return 0;
}
