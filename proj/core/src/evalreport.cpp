#include "causax/evalreport.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdio>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include <nlohmann/json.hpp>

#include "causax/error.hpp"

namespace causax {

std::string serialize_prediction(const PredictionRecord& p) {
  nlohmann::ordered_json j;
  j["instance_id"] = p.instance_id;
  j["model_name"] = p.model_name;
  j["answer"] = p.answer;
  return j.dump();
}

PredictionRecord parse_prediction(std::string_view line) {
  try {
    auto j = nlohmann::json::parse(line);
    return {j.at("instance_id").get<std::string>(), j.at("model_name").get<std::string>(),
            j.at("answer").get<std::string>()};
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed prediction: ") + e.what());
  }
}

std::optional<Label> normalize_answer(std::string_view raw) {
  std::size_t i = 0;
  while (i < raw.size()) {
    if (std::isalnum(static_cast<unsigned char>(raw[i])) == 0) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < raw.size() && std::isalnum(static_cast<unsigned char>(raw[j])) != 0) ++j;
    std::string word(raw.substr(i, j - i));
    for (auto& c : word) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    if (word == "yes") return Label::Yes;
    if (word == "no") return Label::No;
    i = j;
  }
  return std::nullopt;
}

BucketScheme bucket_scheme_from_string(std::string_view s) {
  if (s == "structure" || s == "node_count_structure") return BucketScheme::NodeCountStructure;
  if (s == "branching" || s == "node_count_branching") return BucketScheme::NodeCountBranching;
  if (s == "node_count") return BucketScheme::NodeCount;
  if (s == "auto") return BucketScheme::Auto;
  throw ValidationError("unknown bucket scheme '" + std::string(s) + "'");
}

namespace {

std::string format_number(double v, int precision) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", precision, v);
  return buf;
}

std::string shortest(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, ptr);
}

}  // namespace

std::string BucketKey::label() const {
  std::string out = std::to_string(node_count);
  if (structure) {
    out += ':';
    out += short_label(*structure);
  }
  if (branching_factor) {
    out += structure ? "=" : ":BF=";
    out += shortest(*branching_factor);
  }
  return out;
}

BucketKey bucket_of(const AxiomInstance& inst, BucketScheme scheme) {
  switch (scheme) {
    case BucketScheme::NodeCountStructure: return {inst.node_count, inst.structure, std::nullopt};
    case BucketScheme::NodeCountBranching:
      return {inst.node_count, StructureTag::Branched, inst.branching_factor};
    case BucketScheme::NodeCount: return {inst.node_count, std::nullopt, std::nullopt};
    case BucketScheme::Auto: break;
  }
  return {inst.node_count, inst.structure, std::nullopt};
}

std::vector<BucketKey> EvalReport::buckets() const {
  std::set<BucketKey> keys;
  for (const auto& [model, row] : rows_) {
    for (const auto& [key, cell] : row) keys.insert(key);
  }
  return {keys.begin(), keys.end()};
}

std::optional<Cell> EvalReport::cell(const std::string& model, const BucketKey& key) const {
  auto r = rows_.find(model);
  if (r == rows_.end()) return std::nullopt;
  auto c = r->second.find(key);
  if (c == r->second.end()) return std::nullopt;
  return c->second;
}

void EvalReport::merge(const EvalReport& other) {
  for (const auto& [model, row] : other.rows_) {
    auto& mine = rows_[model];
    for (const auto& [key, cell] : row) {
      auto [it, inserted] = mine.emplace(key, cell);
      if (inserted) continue;
      if (it->second.total != cell.total) {
        throw ValidationError("cannot merge reports: bucket " + key.label() + " has size " +
                              std::to_string(it->second.total) + " and " +
                              std::to_string(cell.total));
      }
      it->second.correct += cell.correct;
    }
  }
}

EvalReport score(std::span<const PredictionRecord> predictions,
                 std::span<const AxiomInstance> corpus, BucketScheme scheme) {
  if (scheme == BucketScheme::Auto) {
    const bool all_branched = !corpus.empty() &&
                              std::all_of(corpus.begin(), corpus.end(), [](const AxiomInstance& i) {
                                return i.structure == StructureTag::Branched;
                              });
    scheme = all_branched ? BucketScheme::NodeCountBranching : BucketScheme::NodeCountStructure;
  }

  std::unordered_map<std::string_view, const AxiomInstance*> by_id;
  by_id.reserve(corpus.size());
  std::map<BucketKey, std::size_t> bucket_sizes;
  for (const auto& inst : corpus) {
    if (!by_id.emplace(inst.id, &inst).second) {
      throw ValidationError("corpus repeats instance id '" + inst.id + "'");
    }
    ++bucket_sizes[bucket_of(inst, scheme)];
  }

  EvalReport report;
  std::unordered_set<std::string> seen;
  for (const auto& p : predictions) {
    auto it = by_id.find(p.instance_id);
    if (it == by_id.end()) {
      throw ValidationError("prediction refers to unknown instance '" + p.instance_id + "'");
    }
    if (!seen.insert(p.model_name + '\n' + p.instance_id).second) {
      throw ValidationError("duplicate prediction for model '" + p.model_name + "' on instance '" +
                            p.instance_id + "'");
    }
    auto& row = report.row(p.model_name);
    if (row.empty()) {
      for (const auto& [key, size] : bucket_sizes) row[key] = Cell{0, size};
    }
    auto answer = normalize_answer(p.answer);
    if (answer && *answer == it->second->label) ++row[bucket_of(*it->second, scheme)].correct;
  }
  return report;
}

ReportFormat report_format_from_string(std::string_view s) {
  if (s == "text" || s == "aligned_text") return ReportFormat::AlignedText;
  if (s == "csv") return ReportFormat::Csv;
  if (s == "markdown" || s == "md") return ReportFormat::Markdown;
  throw ValidationError("unknown report format '" + std::string(s) + "'");
}

std::string render_report(const EvalReport& report, ReportFormat format) {
  if (report.empty()) throw ValidationError("cannot render an empty report");
  const auto keys = report.buckets();
  std::string out;

  if (format == ReportFormat::Csv) {
    out = "model,bucket,correct,total,accuracy\n";
    for (const auto& [model, row] : report.rows()) {
      for (const auto& key : keys) {
        auto c = row.find(key);
        if (c == row.end()) continue;
        out += model + ',' + key.label() + ',' + std::to_string(c->second.correct) + ',' +
               std::to_string(c->second.total) + ',' + shortest(c->second.accuracy()) + '\n';
      }
    }
    return out;
  }

  std::vector<std::string> header{"model"};
  for (const auto& k : keys) header.push_back(k.label());
  std::vector<std::vector<std::string>> table{header};
  for (const auto& [model, row] : report.rows()) {
    std::vector<std::string> line{model};
    for (const auto& key : keys) {
      auto c = row.find(key);
      line.push_back(c == row.end() ? "-" : format_number(c->second.accuracy(), 2));
    }
    table.push_back(std::move(line));
  }

  if (format == ReportFormat::Markdown) {
    auto emit = [&](const std::vector<std::string>& cells) {
      out += '|';
      for (const auto& c : cells) out += ' ' + c + " |";
      out += '\n';
    };
    emit(table[0]);
    out += '|';
    for (std::size_t i = 0; i < header.size(); ++i) out += i == 0 ? " --- |" : " ---: |";
    out += '\n';
    for (std::size_t r = 1; r < table.size(); ++r) emit(table[r]);
    return out;
  }

  std::vector<std::size_t> width(header.size(), 0);
  for (const auto& line : table) {
    for (std::size_t i = 0; i < line.size(); ++i) width[i] = std::max(width[i], line[i].size());
  }
  for (const auto& line : table) {
    std::string text;
    for (std::size_t i = 0; i < line.size(); ++i) {
      if (i > 0) text += "  ";
      std::string pad(width[i] - line[i].size(), ' ');
      text += i == 0 ? line[i] + pad : pad + line[i];
    }
    while (!text.empty() && text.back() == ' ') text.pop_back();
    out += text + '\n';
  }
  return out;
}

}  // namespace causax
