// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure. Usage: causax_acceptance <path-to-causax-cli>

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "causax/corpus.hpp"
#include "causax/error.hpp"
#include "causax/evalreport.hpp"
#include "causax/generators.hpp"
#include "causax/oracles.hpp"
#include "causax/presets.hpp"
#include "causax/record.hpp"
#include "causax/reference_oracles.hpp"
#include "causax/text.hpp"
#include "causax/tokenizer.hpp"
#include "test_support.hpp"

namespace fs = std::filesystem;
using namespace causax;

namespace {

// Pinned limits and tolerances.
constexpr double kDsepBudgetSeconds = 60.0;
constexpr double kTransitivityBudgetSeconds = 10.0;
constexpr double kCorpusBudgetSeconds = 120.0;
constexpr double kReversalTarget = 12000.0;
constexpr double kReversalTolerance = 0.15;
constexpr double kRandomAccuracyTolerance = 0.02;
constexpr std::size_t kScoringBucketSize = 10000;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Outcome {
  bool pass = true;
  std::string detail;
};

unsigned threads() { return std::max(1u, std::thread::hardware_concurrency()); }

// ---- 1 ----------------------------------------------------------------------

Outcome dsep_equivalence() {
  std::mt19937 gen(1001);
  std::size_t queries = 0, mismatches = 0;
  const auto t0 = Clock::now();
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t n = 3 + static_cast<std::size_t>(trial % 5);
    const double p = 0.2 + 0.15 * static_cast<double>(trial % 4);
    auto g = testing::random_dag(n, p, gen);
    for (const auto& h : enumerate_dsep_hypotheses(g, 3)) {
      ++queries;
      if (label_dsep(g, h.query) != reference::brute_force_dsep(g, h.query)) ++mismatches;
    }
  }
  const double s = seconds_since(t0);
  return {mismatches == 0 && s < kDsepBudgetSeconds,
          std::to_string(queries) + " queries, " + std::to_string(mismatches) + " mismatches, " +
              std::to_string(s) + " s"};
}

// ---- 2 ----------------------------------------------------------------------

Outcome transitivity_equivalence() {
  std::mt19937 gen(2002);
  std::size_t queries = 0, mismatches = 0;
  const auto t0 = Clock::now();
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t n = 3 + static_cast<std::size_t>(trial % 10);
    auto g = testing::random_dag(n, 0.1 + 0.1 * static_cast<double>(trial % 5), gen);
    for (const auto& a : g.nodes()) {
      for (const auto& b : g.nodes()) {
        if (a == b) continue;
        ++queries;
        if (label_transitivity(g, {a, b}) != reference::brute_force_transitivity(g, {a, b})) ++mismatches;
      }
    }
  }
  const double s = seconds_since(t0);
  return {mismatches == 0 && s < kTransitivityBudgetSeconds,
          std::to_string(queries) + " queries, " + std::to_string(mismatches) + " mismatches, " +
              std::to_string(s) + " s"};
}

// ---- 3 ----------------------------------------------------------------------

struct PrintedRow {
  const char* text;
  bool labeled;
};

// Printed example rows, verbatim apart from markup. Labeled rows end in
// "?: Yes" / "?: No" or "? Yes." and must be regenerated exactly, modulo the
// "?:" separator and the trailing period.
const PrintedRow kPrintedRows[] = {
    {"X1 causes X2. X2 causes X3. Does X1 cause X3? Yes.", true},
    {"X1 causes X2. X2 causes X3. Are X1 and X2 d-separated given {X3}? No", true},
    {"T causes T1. T2 causes T. T2 causes t. T2 causes T3. t causes T. t causes T1. t causes T3. "
     "Are T3 and T d-separated given {t, T2}? Yes",
     true},
    {"Mhb causes iqB. iqB causes G. Does G cause iqB?: No", true},
    {"N5w causes s. 6D causes s. Does N5w cause s?: Yes", true},
    {"w3 causes ROv. w3 causes tQC. H causes ROv. H causes tQC. b causes ROv. b causes w3. b causes H. "
     "Does tQC cause ROv?: No",
     true},
    {"LKk causes 5Ov. Kk causes L0. L0 causes KWO. 5Ov causes c. Does KWO cause L0?: No", true},
    {"FDAH26mV7 causes 7tzaIHjlY. 7tzaIHjlY causes 0kspcX95Im. 0kspcX95Im causes 7rhFSlx2o9. "
     "7rhFSlx2o9 causes 1PlG5LHVqp. Does FDAH26mV7 cause 7tzaIHjlY?: Yes",
     true},
    {"r causes rZ. rZ causes L. L causes bUx. bUx causes Pbr. Pbr causes 1w. 1w causes c3. c3 causes yBQ. "
     "yBQ causes yK. yK causes w. w causes P. P causes kH. kH causes 1u. 1u causes jV7. jV7 causes i. "
     "Does r cause rZ?: Yes",
     true},
    {"rU6 causes eF. eF causes ivC. 3R causes ivC. 3R causes A8. 2 causes A8. 2 causes i. i causes a03. "
     "y causes a03. b causes y. b causes h. h causes yN. ic0 causes yN. ic0 causes Hd. Hd causes U. "
     "Does rU6 cause eF?: Yes",
     true},
    {"1c1 causes kT. kT causes t4d. t4d causes zW. zW causes Z4P. Z4P causes pij. "
     "Are zW and pij d-separated given {t4d, kT, Z4P}?: Yes",
     true},
    {"nL causes A. A causes xx. xx causes 5Cg. Are xx and nL d-separated?: No", true},
    {"ZWn causes P9. u causes P9. B causes u. NS causes B. Are P9 and u d-separated given {B}?: No", true},
    {"ZWn causes P9. u causes P9. B causes u. NS causes B. Are P9 and u d-separated given {B, ZWn}?: No",
     true},
    {"FZg causes l. FZg causes Y. Y causes vEU. a causes vEU. f5 causes a. f5 causes R. R causes O. "
     "2WJ causes O. 2WJ causes TDA. TDA causes 9d. Are 2WJ and 9d d-separated given {FZg}?",
     false},
    {"t causes a. t causes OP. t causes wT. faG causes t. faG causes Z. pK causes OP. pK causes 0K3. "
     "pK causes yUa. 0K3 causes a. 0K3 causes OP. 0K3 causes wT. Z causes yUa. rY6 causes faG. "
     "rY6 causes wT. Are t and yUa d-separated given {faG}?: Yes",
     true},
    {"5e0 causes vAf. vAf causes VO. Does vAf cause VO?: Yes", true},
    {"5e0 causes vAf. vAf causes VO. Does vAf cause 5e0?: No", true},
    {"e0F causes Z. Z causes 0U. 0U causes mR. mR causes 1L. Does mR cause 1L?: Yes", true},
    {"e0F causes Z. Z causes 0U. 0U causes mR. mR causes 1L. Does Z cause e0F?: No", true},
    {"b causes K. K causes qPv. 5 causes qPv. Does b cause qPv?: Yes", true},
    {"b causes K. K causes qPv. 5 causes qPv. Does b cause 5?: No", true},
    {"Mhb causes t0a. 6Eh causes Mhb. NS causes 6Eh. n causes NS. n causes xu. Does xu cause 6Eh?: No", true},
    {"Mhb causes t0a. 6Eh causes Mhb. NS causes 6Eh. n causes NS. n causes xu. Does n cause NS?: Yes", true},
};

std::string canonical(std::string s) {
  if (auto p = s.find("?: "); p != std::string::npos) s.replace(p, 3, "? ");
  if (!s.empty() && s.back() == '.' && (s.ends_with("Yes.") || s.ends_with("No."))) s.pop_back();
  return s;
}

Outcome printed_examples() {
  std::size_t rows = 0, labeled = 0, failures = 0;
  std::string first_failure;
  for (const auto& row : kPrintedRows) {
    ++rows;
    try {
      auto parsed = parse_text(row.text);
      auto inst = instance_from_text(row.text);
      const Label oracle = oracle_label(inst);
      bool ok = true;
      if (row.labeled) {
        ++labeled;
        ok = parsed.label && *parsed.label == oracle;
        inst.label = oracle;
        ok = ok && serialize_text(inst) == canonical(row.text);
      } else {
        ok = question_text(inst.graph, inst.hypothesis) == row.text;
      }
      if (!ok) {
        ++failures;
        if (first_failure.empty()) first_failure = row.text;
      }
    } catch (const std::exception& e) {
      ++failures;
      if (first_failure.empty()) first_failure = std::string(row.text) + " (" + e.what() + ")";
    }
  }
  std::string detail = std::to_string(rows) + " rows (" + std::to_string(labeled) + " labeled), " +
                       std::to_string(failures) + " failures";
  if (!first_failure.empty()) detail += "; first: " + first_failure;
  return {failures == 0 && labeled >= 10, detail};
}

// ---- 4 ----------------------------------------------------------------------

struct Built {
  std::vector<AxiomInstance> corpus;
  double seconds = 0;
};

Built build_timed(const std::string& preset, std::uint64_t seed) {
  const auto t0 = Clock::now();
  auto c = build_corpus(preset_spec(preset, seed), {threads()});
  return {std::move(c), seconds_since(t0)};
}

bool ranges_ok(const std::vector<AxiomInstance>& c, std::size_t from, std::size_t to) {
  for (std::size_t i = from; i < to; ++i) {
    const auto& inst = c[i];
    if (inst.node_count < 3 || inst.node_count > 6) return false;
    for (const auto& n : inst.graph.nodes()) {
      if (n.size() < 1 || n.size() > 3) return false;
    }
  }
  return true;
}

// Keeps the TS2 corpus for the tokenizer criterion.
std::vector<AxiomInstance> g_ts2;

Outcome corpus_statistics() {
  std::ostringstream d;
  bool pass = true;

  auto ts1 = build_timed("ts1", 1);
  std::size_t flip = 0, seq = 0, reversed = 0;
  for (const auto& inst : ts1.corpus) {
    (inst.structure == StructureTag::RandomFlip ? flip : seq) += 1;
    if (is_reversed_chain(inst.graph)) ++reversed;
  }
  // Expected count under the flip profile: uniform n in 3..6, at least one
  // edge flipped, all n-1 edges flipped with probability 2^-(n-1) / (1 - 2^-(n-1)).
  double expected = 0;
  for (int n = 3; n <= 6; ++n) {
    const double all = std::pow(0.5, n - 1);
    expected += 73000.0 / 4.0 * all / (1.0 - all);
  }
  const double lo = kReversalTarget * (1 - kReversalTolerance);
  const double hi = kReversalTarget * (1 + kReversalTolerance);
  const bool ts1_ok = ts1.corpus.size() == 174000 && flip == 73000 && seq == 101000 &&
                      ranges_ok(ts1.corpus, 0, ts1.corpus.size()) && reversed >= lo && reversed <= hi &&
                      expected >= lo && expected <= hi && ts1.seconds < kCorpusBudgetSeconds;
  pass = pass && ts1_ok;
  d << "ts1 " << flip << "+" << seq << ", reversed " << reversed << " (expected " << std::lround(expected)
    << ", band [" << lo << ", " << hi << "]), " << ts1.seconds << " s";

  auto ts2 = build_timed("ts2", 1);
  std::size_t ts2_seq = 0, ts2_flip = 0;
  for (const auto& inst : ts2.corpus) (inst.structure == StructureTag::Sequential ? ts2_seq : ts2_flip) += 1;
  const bool ts2_ok = ts2_seq == 132000 && ts2_flip == 42000 && ranges_ok(ts2.corpus, 0, ts2.corpus.size()) &&
                      ts2.seconds < kCorpusBudgetSeconds;
  pass = pass && ts2_ok;
  d << "; ts2 " << ts2_seq << "+" << ts2_flip << ", " << ts2.seconds << " s";
  g_ts2 = std::move(ts2.corpus);

  auto ds = build_timed("dsep-train", 1);
  double bf_lo = 1e9, bf_hi = -1e9;
  std::size_t yes = 0;
  for (const auto& inst : ds.corpus) {
    bf_lo = std::min(bf_lo, inst.graph.branching_factor());
    bf_hi = std::max(bf_hi, inst.graph.branching_factor());
    yes += inst.label == Label::Yes;
  }
  const bool ds_ok = ds.corpus.size() == 175000 && bf_lo >= 0.6 - 1e-12 && bf_hi <= 0.8 + 1e-12 &&
                     ds.seconds < kCorpusBudgetSeconds;
  pass = pass && ds_ok;
  d << "; dsep-train " << ds.corpus.size() << " (" << yes << " Yes), bf [" << bf_lo << ", " << bf_hi << "], "
    << ds.seconds << " s";
  return {pass, d.str()};
}

// ---- 5 ----------------------------------------------------------------------

Outcome eval_ranges() {
  std::ostringstream d;
  bool pass = true;

  auto length = build_corpus(preset_spec("eval-length", 5), {threads()});
  std::set<std::pair<std::size_t, StructureTag>> buckets;
  for (const auto& inst : length) buckets.insert({inst.node_count, inst.structure});
  bool length_ok = buckets.size() == 18;
  for (std::size_t n = 7; n <= 15; ++n) {
    length_ok = length_ok && buckets.count({n, StructureTag::Sequential}) && buckets.count({n, StructureTag::RandomFlip});
  }
  pass = pass && length_ok;
  d << "length buckets " << buckets.size();

  auto names = build_corpus(preset_spec("eval-names", 5), {threads()});
  std::size_t short_names = 0;
  for (const auto& inst : names)
    for (const auto& n : inst.graph.nodes()) short_names += n.size() < 8 || n.size() > 10;
  pass = pass && short_names == 0 && !names.empty();
  d << "; names outside 8-10: " << short_names;

  auto rev = build_corpus(preset_spec("eval-reversal", 5), {threads()});
  std::size_t not_reversed = 0;
  std::set<std::size_t> rev_sizes;
  for (const auto& inst : rev) {
    not_reversed += !is_reversed_chain(inst.graph);
    rev_sizes.insert(inst.node_count);
  }
  pass = pass && not_reversed == 0 && rev_sizes == std::set<std::size_t>{3, 4, 5, 6};
  d << "; reversal graphs not fully reversed: " << not_reversed;

  auto br = build_corpus(preset_spec("eval-branching", 5), {threads()});
  std::set<std::pair<std::size_t, double>> grid;
  std::size_t wrong_edges = 0;
  for (const auto& inst : br) {
    grid.insert({inst.node_count, inst.branching_factor});
    const auto want = static_cast<std::size_t>(std::llround(inst.branching_factor * static_cast<double>(inst.node_count)));
    wrong_edges += inst.graph.edge_count() != want;
  }
  std::set<std::pair<std::size_t, double>> want_grid;
  for (std::size_t n : {5, 8, 10, 12})
    for (double bf : {1.4, 2.0}) want_grid.insert({n, bf});
  pass = pass && wrong_edges == 0 && grid == want_grid;
  d << "; branching cells " << grid.size() << ", wrong edge counts: " << wrong_edges;
  return {pass, d.str()};
}

// ---- 6 ----------------------------------------------------------------------

Outcome tokenizer_roundtrip() {
  auto vocab = Vocabulary::build(Task::Transitivity);
  auto corpus = g_ts2.empty() ? build_corpus(preset_spec("ts2", 1), {threads()}) : g_ts2;
  auto names = build_corpus(preset_spec("eval-names", 6), {threads()});
  std::size_t total = 0, ok = 0, oov = 0;
  for (const auto* set : {&corpus, &names}) {
    for (const auto& inst : *set) {
      ++total;
      const auto text = serialize_text(inst);
      try {
        if (decode(encode(text, vocab), vocab) == text) ++ok;
      } catch (const EncodingError&) {
        ++oov;
      }
    }
  }
  return {vocab.size() == 69 && corpus.size() == 174000 && ok == total && oov == 0,
          "vocabulary " + std::to_string(vocab.size()) + ", " + std::to_string(ok) + "/" +
              std::to_string(total) + " round-trips (" + std::to_string(corpus.size()) +
              " ts2 + " + std::to_string(names.size()) + " long-name), " + std::to_string(oov) + " OOV"};
}

// ---- 7 ----------------------------------------------------------------------

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int run_cli(const std::string& cli, const std::string& args) {
  const std::string cmd = cli + " " + args + " >/dev/null 2>&1";
  return std::system(cmd.c_str());
}

Outcome determinism(const std::string& cli) {
  const fs::path root = fs::temp_directory_path() / "causax-acceptance";
  fs::remove_all(root);
  const auto a = root / "a", b = root / "b", c = root / "c";
  if (run_cli(cli, "generate --preset ts2 --seed 7 --threads 1 --out " + a.string()) != 0 ||
      run_cli(cli, "generate --preset ts2 --seed 7 --threads 4 --out " + b.string()) != 0 ||
      run_cli(cli, "generate --preset ts2 --seed 8 --out " + c.string()) != 0) {
    return {false, "generate failed"};
  }
  bool identical = true;
  for (const char* f : {"corpus.jsonl", "corpus.txt", "manifest.json"}) {
    identical = identical && slurp(a / f) == slurp(b / f);
  }

  auto digest = [](const fs::path& dir) {
    const auto m = slurp(dir / "manifest.json");
    const auto at = m.find("\"digest\": \"");
    return at == std::string::npos ? std::string() : m.substr(at + 11, 64);
  };
  const bool digest_changes = !digest(a).empty() && digest(a) != digest(c);

  std::vector<AxiomInstance> other;
  std::ifstream in(c / "corpus.jsonl");
  std::string line;
  while (std::getline(in, line)) other.push_back(parse_record(line));
  std::size_t seq = 0, flip = 0, wrong = 0;
  for (const auto& inst : other) {
    (inst.structure == StructureTag::Sequential ? seq : flip) += 1;
    wrong += oracle_label(inst) != inst.label;
  }
  const bool counts = seq == 132000 && flip == 42000 && ranges_ok(other, 0, other.size()) && wrong == 0;
  fs::remove_all(root);
  return {identical && digest_changes && counts,
          std::string("seed 7 twice (1 vs 4 threads) ") + (identical ? "byte-identical" : "DIFFERENT") +
              ", seed 8 digest " + (digest_changes ? "differs" : "SAME") + ", seed 8 counts " +
              std::to_string(seq) + "+" + std::to_string(flip) + " with " + std::to_string(wrong) +
              " label mismatches"};
}

// ---- 8 ----------------------------------------------------------------------

Outcome scoring_sanity() {
  auto params = default_eval_params(EvalKind::Length);
  params.count_per_bucket = kScoringBucketSize;
  auto corpus = build_eval_suite(EvalKind::Length, params, 8, {threads()});

  std::mt19937_64 gen(8008);
  std::bernoulli_distribution coin(0.5);
  std::vector<PredictionRecord> preds;
  preds.reserve(corpus.size() * 3);
  for (const auto& inst : corpus) {
    preds.push_back({inst.id, "echo", std::string(to_string(inst.label))});
    preds.push_back({inst.id, "negated", std::string(to_string(negate(inst.label)))});
    preds.push_back({inst.id, "uniform", coin(gen) ? "Yes" : "No"});
  }
  auto report = score(preds, corpus);

  bool pass = true;
  double worst = 0;
  std::size_t buckets = 0;
  for (const auto& [key, cell] : report.rows().at("echo")) {
    ++buckets;
    pass = pass && cell.accuracy() == 1.0 && cell.total == kScoringBucketSize;
  }
  for (const auto& [key, cell] : report.rows().at("negated")) pass = pass && cell.accuracy() == 0.0;
  for (const auto& [key, cell] : report.rows().at("uniform")) {
    worst = std::max(worst, std::abs(cell.accuracy() - 0.5));
    pass = pass && std::abs(cell.accuracy() - 0.5) <= kRandomAccuracyTolerance;
  }
  return {pass && buckets == 18, std::to_string(buckets) + " buckets of " + std::to_string(kScoringBucketSize) +
                                     ", echo 1.0, negated 0.0, uniform max |acc-0.5| = " + std::to_string(worst)};
}

// ---- 9 ----------------------------------------------------------------------

Outcome chain_formulas() {
  std::size_t checks = 0, failures = 0;
  for (std::size_t n = 3; n <= 15; ++n) {
    auto g = make_sequential_chain(testing::indexed_names(n));
    std::size_t yes = 0;
    for (NodeIndex i = 0; i < n; ++i)
      for (NodeIndex j = 0; j < n; ++j)
        if (i != j) yes += label_transitivity(g, {g.name(i), g.name(j)}) == Label::Yes;
    ++checks;
    failures += yes != n * (n - 1) / 2;
    for (NodeIndex i = 0; i < n; ++i)
      for (NodeIndex j = i + 1; j < n; ++j)
        for (NodeIndex k = 0; k < n; ++k) {
          if (k == i || k == j) continue;
          ++checks;
          failures += label_dsep(g, {g.name(i), g.name(j), {g.name(k)}}) != to_label(i < k && k < j);
        }
  }
  return {failures == 0, std::to_string(checks) + " checks, " + std::to_string(failures) + " failures"};
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: causax_acceptance <causax-cli>\n";
    return 2;
  }
  const std::string cli = argv[1];

  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"1 d-separation oracle equivalence", dsep_equivalence},
      {"2 transitivity oracle equivalence", transitivity_equivalence},
      {"3 printed example fidelity", printed_examples},
      {"4 training corpus statistics", corpus_statistics},
      {"5 evaluation range conformance", eval_ranges},
      {"6 tokenizer vocabulary and round trip", tokenizer_roundtrip},
      {"7 CLI determinism", [&] { return determinism(cli); }},
      {"8 scoring sanity", scoring_sanity},
      {"9 analytic chain formulas", chain_formulas},
  };

  int failed = 0;
  for (const auto& [name, fn] : criteria) {
    Outcome o;
    try {
      o = fn();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    std::cout << (o.pass ? "PASS" : "FAIL") << " [" << name << "] " << o.detail << std::endl;
    failed += !o.pass;
  }
  std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed") << '\n';
  return failed == 0 ? 0 : 1;
}
