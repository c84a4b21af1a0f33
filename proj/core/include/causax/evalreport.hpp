#pragma once

#include <compare>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "causax/instance.hpp"

namespace causax {

struct PredictionRecord {
  std::string instance_id;
  std::string model_name;
  std::string answer;

  friend bool operator==(const PredictionRecord&, const PredictionRecord&) = default;
};

/// JSON object with instance_id, model_name, answer.
std::string serialize_prediction(const PredictionRecord& p);
/// Throws ParseError.
PredictionRecord parse_prediction(std::string_view line);

/// First standalone "yes" or "no" (any case); nullopt when neither occurs.
std::optional<Label> normalize_answer(std::string_view raw);

enum class BucketScheme {
  /// Node count x structure tag (FS / RF / ...), the length-table layout.
  NodeCountStructure,
  /// Node count x target branching factor.
  NodeCountBranching,
  NodeCount,
  /// Branching when every instance is branched, NodeCountStructure otherwise.
  Auto,
};

BucketScheme bucket_scheme_from_string(std::string_view s);

struct BucketKey {
  std::size_t node_count = 0;
  std::optional<StructureTag> structure;
  std::optional<double> branching_factor;

  /// "7:FS", "12:BF=1.4", or "5".
  std::string label() const;

  friend bool operator==(const BucketKey&, const BucketKey&) = default;
  friend auto operator<=>(const BucketKey&, const BucketKey&) = default;
};

BucketKey bucket_of(const AxiomInstance& inst, BucketScheme scheme);

struct Cell {
  std::size_t correct = 0;
  std::size_t total = 0;

  double accuracy() const noexcept {
    return total == 0 ? 0.0 : static_cast<double>(correct) / static_cast<double>(total);
  }
  friend bool operator==(const Cell&, const Cell&) = default;
};

/// Accuracy per model and bucket. Denominators are bucket sizes, so missing
/// and unparseable answers both count as wrong.
class EvalReport {
 public:
  using Row = std::map<BucketKey, Cell>;

  const std::map<std::string, Row>& rows() const noexcept { return rows_; }
  bool empty() const noexcept { return rows_.empty(); }
  /// Union of bucket keys over all models, sorted.
  std::vector<BucketKey> buckets() const;
  std::optional<Cell> cell(const std::string& model, const BucketKey& key) const;

  /// Combines reports built from disjoint prediction sets over one corpus.
  /// Throws ValidationError if bucket sizes disagree.
  void merge(const EvalReport& other);

  Row& row(const std::string& model) { return rows_[model]; }

  friend bool operator==(const EvalReport&, const EvalReport&) = default;

 private:
  std::map<std::string, Row> rows_;
};

/// Throws ValidationError for unknown instance ids and repeated
/// (model, instance) pairs.
EvalReport score(std::span<const PredictionRecord> predictions,
                 std::span<const AxiomInstance> corpus, BucketScheme scheme = BucketScheme::Auto);

enum class ReportFormat { AlignedText, Csv, Markdown };

ReportFormat report_format_from_string(std::string_view s);

/// Columns ordered by node count, then structure tag (FS before RF), then
/// branching factor. CSV has header "model,bucket,correct,total,accuracy" and
/// one row per model and bucket. Throws ValidationError for an empty report.
std::string render_report(const EvalReport& report, ReportFormat format);

}  // namespace causax
