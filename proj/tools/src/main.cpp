// causax command-line entry point.

#include "CLI11/CLI11.hpp"
#include <nlohmann/json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "causax/corpus.hpp"
#include "causax/digest.hpp"
#include "causax/error.hpp"
#include "causax/evalreport.hpp"
#include "causax/presets.hpp"
#include "causax/prompt.hpp"
#include "causax/record.hpp"
#include "causax/spec_io.hpp"
#include "causax/text.hpp"
#include "causax/tokenizer.hpp"

namespace fs = std::filesystem;
using namespace causax;

namespace {

constexpr const char* kOutDirEnv = "CAUSAX_OUT_DIR";

void log(const std::string& msg) { std::cerr << "causax: " << msg << '\n'; }

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ResourceError("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const fs::path& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ResourceError("cannot write " + path.string());
  out << contents;
  if (!out.flush()) throw ResourceError("write failed for " + path.string());
}

template <class Fn>
void for_each_line(const std::string& text, Fn&& fn) {
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    auto end = text.find('\n', pos);
    if (end == std::string::npos) end = text.size();
    ++line_no;
    std::string_view line(text.data() + pos, end - pos);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (!line.empty()) fn(line, line_no);
    pos = end + 1;
  }
}

std::vector<AxiomInstance> load_corpus(const fs::path& path) {
  std::vector<AxiomInstance> out;
  for_each_line(read_file(path), [&](std::string_view line, std::size_t n) {
    try {
      out.push_back(parse_record(line));
    } catch (const Error& e) {
      throw ParseError(path.string() + ":" + std::to_string(n) + ": " + e.what());
    }
  });
  return out;
}

unsigned resolve_threads(unsigned requested) {
  if (requested > 0) return requested;
  return std::max(1u, std::thread::hardware_concurrency());
}

// ---- generate ---------------------------------------------------------------

struct GenerateArgs {
  std::string preset;
  std::string spec_path;
  std::optional<std::uint64_t> seed;
  std::string out_dir;
  unsigned threads = 0;
  std::optional<std::size_t> count_per_bucket;
};

int run_generate(const GenerateArgs& a) {
  CorpusSpec spec;
  if (!a.preset.empty()) {
    PresetOptions opts;
    opts.count_per_bucket = a.count_per_bucket;
    spec = preset_spec(a.preset, a.seed.value_or(0), opts);
  } else {
    spec = parse_corpus_spec(read_file(a.spec_path));
    if (a.seed) spec.master_seed = *a.seed;
  }

  fs::path out = a.out_dir;
  if (out.empty()) {
    const char* env = std::getenv(kOutDirEnv);
    if (env == nullptr || *env == '\0') {
      throw ValidationError(std::string("no output directory: pass --out or set ") + kOutDirEnv);
    }
    out = env;
  }
  std::error_code ec;
  fs::create_directories(out, ec);
  if (ec) throw ResourceError("cannot create " + out.string() + ": " + ec.message());

  const unsigned threads = resolve_threads(a.threads);
  log("generating '" + spec.name + "' (" + std::to_string(spec.total_count()) +
      " instances, seed " + std::to_string(spec.master_seed) + ", " + std::to_string(threads) +
      " threads)");
  const auto corpus = build_corpus(spec, {threads});

  std::string jsonl;
  std::string text;
  std::size_t yes = 0;
  std::map<std::string, std::size_t> by_structure;
  std::map<std::size_t, std::size_t> by_node_count;
  for (const auto& inst : corpus) {
    jsonl += serialize_record(inst);
    jsonl += '\n';
    text += serialize_text(inst);
    text += '\n';
    if (inst.label == Label::Yes) ++yes;
    ++by_structure[std::string(to_string(inst.structure))];
    ++by_node_count[inst.node_count];
  }
  write_file(out / "corpus.jsonl", jsonl);
  write_file(out / "corpus.txt", text);

  nlohmann::ordered_json m;
  m["name"] = spec.name;
  m["preset"] = a.preset.empty() ? nlohmann::ordered_json(nullptr) : nlohmann::ordered_json(a.preset);
  m["seed"] = spec.master_seed;
  m["spec"] = nlohmann::ordered_json::parse(format_corpus_spec(spec));
  m["counts"]["total"] = corpus.size();
  m["counts"]["yes"] = yes;
  m["counts"]["no"] = corpus.size() - yes;
  for (const auto& [k, v] : by_structure) m["counts"]["structure"][k] = v;
  for (const auto& [k, v] : by_node_count) m["counts"]["node_count"][std::to_string(k)] = v;
  m["files"]["corpus.jsonl"] = sha256_hex(jsonl);
  m["files"]["corpus.txt"] = sha256_hex(text);
  m["digest"] = sha256_hex(jsonl + text);
  write_file(out / "manifest.json", m.dump(2) + "\n");

  log("wrote " + std::to_string(corpus.size()) + " instances to " + out.string());
  std::cout << m["digest"].get<std::string>() << '\n';
  return 0;
}

// ---- tokenize ---------------------------------------------------------------

struct TokenizeArgs {
  std::string corpus;
  std::string task;
  std::string vocab_path;
  std::string out;
  std::string write_vocab;
  bool decode_check = false;
};

int run_tokenize(const TokenizeArgs& a) {
  std::optional<Task> task;
  if (!a.task.empty()) task = task_from_string(a.task);

  std::vector<AxiomInstance> corpus;
  if (!a.corpus.empty()) {
    corpus = load_corpus(a.corpus);
    if (!task && !corpus.empty()) task = corpus.front().task;
  }
  if (!task) task = Task::Transitivity;

  Vocabulary vocab = a.vocab_path.empty() ? Vocabulary::build(*task)
                                          : Vocabulary::parse(read_file(a.vocab_path));
  if (!a.write_vocab.empty()) {
    write_file(a.write_vocab, vocab.to_file_text());
    log("wrote " + std::to_string(vocab.size()) + "-entry vocabulary to " + a.write_vocab);
  }
  if (a.corpus.empty()) return 0;

  std::string dump;
  std::size_t mismatches = 0;
  for (const auto& inst : corpus) {
    const auto text = serialize_text(inst);
    auto tokens = encode(text, vocab);
    if (a.decode_check && decode(tokens, vocab) != text) {
      ++mismatches;
      log("round-trip mismatch for " + inst.id);
    }
    dump += format_token_dump(tokens);
    dump += '\n';
  }
  if (a.out.empty()) {
    std::cout << dump;
  } else {
    write_file(a.out, dump);
  }
  log("tokenized " + std::to_string(corpus.size()) + " instances with a " +
      std::to_string(vocab.size()) + "-entry vocabulary");
  return mismatches == 0 ? 0 : 1;
}

// ---- prompts ----------------------------------------------------------------

struct PromptArgs {
  std::string corpus;
  std::string mode = "zero";
  std::string shots_path;
  std::size_t shot_count = 0;
  std::string out_dir;
  std::size_t limit = 0;
};

int run_prompts(const PromptArgs& a) {
  const auto corpus = load_corpus(a.corpus);
  PromptTemplate tmpl;
  if (a.mode == "zero") {
    tmpl = zero_shot_template();
  } else if (a.mode == "multi") {
    auto shots = a.shots_path.empty() ? reference_transitivity_shots() : load_corpus(a.shots_path);
    if (a.shot_count > 0 && a.shot_count < shots.size()) shots.erase(shots.begin() + static_cast<std::ptrdiff_t>(a.shot_count), shots.end());
    tmpl = multi_shot_template(std::move(shots));
  } else {
    throw ValidationError("unknown prompt mode '" + a.mode + "' (expected zero or multi)");
  }

  const std::size_t n = a.limit > 0 ? std::min(a.limit, corpus.size()) : corpus.size();
  if (!a.out_dir.empty()) {
    std::error_code ec;
    fs::create_directories(a.out_dir, ec);
    if (ec) throw ResourceError("cannot create " + a.out_dir + ": " + ec.message());
    for (std::size_t i = 0; i < n; ++i) {
      write_file(fs::path(a.out_dir) / (corpus[i].id + ".txt"), emit_prompt(corpus[i], tmpl) + "\n");
    }
    log("wrote " + std::to_string(n) + " prompts to " + a.out_dir);
    return 0;
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (i > 0) std::cout << '\n';
    std::cout << emit_prompt(corpus[i], tmpl) << '\n';
  }
  return 0;
}

// ---- validate ---------------------------------------------------------------

int run_validate(const std::string& path) {
  const auto corpus = load_corpus(path);
  std::size_t mismatches = 0;
  std::map<std::string, std::size_t> seen;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const auto& inst = corpus[i];
    if (auto [it, fresh] = seen.emplace(inst.id, i + 1); !fresh) {
      log("line " + std::to_string(i + 1) + ": id " + inst.id + " repeats line " +
          std::to_string(it->second));
      ++mismatches;
      continue;
    }
    const Label expected = oracle_label(inst);
    if (expected != inst.label) {
      log("line " + std::to_string(i + 1) + ": " + inst.id + " is labeled " +
          std::string(to_string(inst.label)) + " but the oracle says " +
          std::string(to_string(expected)));
      ++mismatches;
    }
  }
  std::cout << corpus.size() << " instances, " << mismatches << " mismatches\n";
  return mismatches == 0 ? 0 : 1;
}

// ---- score ------------------------------------------------------------------

struct ScoreArgs {
  std::string corpus;
  std::string preds;
  std::string scheme = "auto";
  std::string format = "text";
  std::string out;
};

int run_score(const ScoreArgs& a) {
  const auto corpus = load_corpus(a.corpus);
  std::vector<PredictionRecord> preds;
  for_each_line(read_file(a.preds), [&](std::string_view line, std::size_t n) {
    try {
      preds.push_back(parse_prediction(line));
    } catch (const Error& e) {
      throw ParseError(a.preds + ":" + std::to_string(n) + ": " + e.what());
    }
  });
  const auto report = score(preds, corpus, bucket_scheme_from_string(a.scheme));
  if (report.empty()) throw ValidationError("no predictions to score");
  const auto rendered = render_report(report, report_format_from_string(a.format));
  if (a.out.empty()) {
    std::cout << rendered;
  } else {
    write_file(a.out, rendered);
  }
  return 0;
}

// ---- inspect ----------------------------------------------------------------

struct InspectArgs {
  std::string corpus;
  std::string id;
  std::optional<std::size_t> index;
};

int run_inspect(const InspectArgs& a) {
  const auto corpus = load_corpus(a.corpus);
  const AxiomInstance* inst = nullptr;
  if (a.index) {
    if (*a.index >= corpus.size()) {
      throw LookupError("index " + std::to_string(*a.index) + " out of range (corpus has " +
                        std::to_string(corpus.size()) + " instances)");
    }
    inst = &corpus[*a.index];
  } else {
    for (const auto& c : corpus) {
      if (c.id == a.id) {
        inst = &c;
        break;
      }
    }
    if (inst == nullptr) throw LookupError("no instance with id '" + a.id + "'");
  }

  std::cout << "id:               " << inst->id << '\n'
            << "task:             " << to_string(inst->task) << '\n'
            << "structure:        " << to_string(inst->structure) << '\n'
            << "nodes:            " << inst->node_count << '\n'
            << "edges:            " << inst->graph.edges().size() << '\n'
            << "branching factor: " << inst->branching_factor << '\n'
            << "max name length:  " << inst->name_length_max << '\n'
            << "seed:             " << inst->seed << '\n'
            << "premise:          " << premise_text(inst->graph) << '\n'
            << "hypothesis:       " << hypothesis_text(inst->hypothesis) << '\n'
            << "label:            " << to_string(inst->label) << '\n'
            << "oracle:           " << to_string(oracle_label(*inst)) << '\n'
            << "graph:\n"
            << inst->graph.debug_dump();
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Generate, tokenize and score axiomatic causal-reasoning corpora"};
  app.require_subcommand(1);

  GenerateArgs gen;
  auto* g = app.add_subcommand("generate", "Build a corpus from a preset or a JSON spec");
  auto* src = g->add_option_group("source");
  src->add_option("--preset", gen.preset, "Named preset")
      ->check(CLI::IsMember(preset_names()));
  src->add_option("--spec", gen.spec_path, "JSON corpus spec")->check(CLI::ExistingFile);
  src->require_option(1);
  g->add_option("--seed", gen.seed, "Master seed (overrides the spec file's)");
  g->add_option("--out", gen.out_dir, std::string("Output directory (default $") + kOutDirEnv + ")");
  g->add_option("--threads", gen.threads, "Worker threads; 0 = all cores")->default_val(0);
  g->add_option("--count-per-bucket", gen.count_per_bucket, "Evaluation presets: instances per bucket");

  TokenizeArgs tok;
  auto* t = app.add_subcommand("tokenize", "Encode a corpus to token ids");
  t->add_option("--corpus", tok.corpus, "Corpus JSONL")->check(CLI::ExistingFile);
  t->add_option("--task", tok.task, "transitivity or dsep (default: from the corpus)");
  t->add_option("--vocab", tok.vocab_path, "Vocabulary file (default: built-in)")->check(CLI::ExistingFile);
  t->add_option("--out", tok.out, "Token dump file (default stdout)");
  t->add_option("--write-vocab", tok.write_vocab, "Write the vocabulary file here");
  t->add_flag("--check", tok.decode_check, "Verify decode(encode(x)) == x");

  PromptArgs pr;
  auto* p = app.add_subcommand("prompts", "Emit zero- or multi-shot prompts");
  p->add_option("--corpus", pr.corpus, "Corpus JSONL")->required()->check(CLI::ExistingFile);
  p->add_option("--mode", pr.mode, "zero or multi")->default_val("zero");
  p->add_option("--shots", pr.shots_path, "Demonstrations as corpus JSONL (default: built-in)")
      ->check(CLI::ExistingFile);
  p->add_option("--shot-count", pr.shot_count, "Use only the first N demonstrations");
  p->add_option("--out", pr.out_dir, "Write one <id>.txt per prompt here (default: stdout, blank-line separated)");
  p->add_option("--limit", pr.limit, "Only the first N instances");

  std::string validate_path;
  auto* v = app.add_subcommand("validate", "Re-run the oracles over a corpus");
  v->add_option("--corpus", validate_path, "Corpus JSONL")->required()->check(CLI::ExistingFile);

  ScoreArgs sc;
  auto* s = app.add_subcommand("score", "Score predictions into an accuracy table");
  s->add_option("--corpus", sc.corpus, "Corpus JSONL")->required()->check(CLI::ExistingFile);
  s->add_option("--preds", sc.preds, "Predictions JSONL")->required()->check(CLI::ExistingFile);
  s->add_option("--scheme", sc.scheme, "auto, structure, branching or node_count")->default_val("auto");
  s->add_option("--format", sc.format, "text, csv or markdown")->default_val("text");
  s->add_option("--out", sc.out, "Report file (default stdout)");

  InspectArgs in;
  auto* i = app.add_subcommand("inspect", "Pretty-print one instance");
  i->add_option("--corpus", in.corpus, "Corpus JSONL")->required()->check(CLI::ExistingFile);
  auto* which = i->add_option_group("which");
  which->add_option("--id", in.id, "Instance id");
  which->add_option("--index", in.index, "Zero-based line index");
  which->require_option(1);

  CLI11_PARSE(app, argc, argv);

  try {
    if (g->parsed()) return run_generate(gen);
    if (t->parsed()) return run_tokenize(tok);
    if (p->parsed()) return run_prompts(pr);
    if (v->parsed()) return run_validate(validate_path);
    if (s->parsed()) return run_score(sc);
    if (i->parsed()) return run_inspect(in);
  } catch (const std::exception& e) {
    log(std::string("error: ") + e.what());
    return 1;
  }
  return 1;
}
