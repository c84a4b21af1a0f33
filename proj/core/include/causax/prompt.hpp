#pragma once

#include <string>
#include <vector>

#include "causax/instance.hpp"

namespace causax {

enum class PromptMode { ZeroShot, MultiShot };

inline constexpr const char* kZeroShotInstruction = "Answer in 'Yes' or 'No' only";
inline constexpr const char* kMultiShotHeader =
    "Following the given examples answer the question regarding causal relationship between "
    "two variables:";

struct PromptTemplate {
  PromptMode mode = PromptMode::ZeroShot;
  std::vector<AxiomInstance> shots;
  std::string instruction_text = kZeroShotInstruction;

  /// Throws ValidationError: multi-shot needs at least one shot, zero-shot none.
  void validate() const;
};

PromptTemplate zero_shot_template();
/// Throws ValidationError for an empty shot list.
PromptTemplate multi_shot_template(std::vector<AxiomInstance> shots);

/// The eight transitivity demonstrations used for multi-shot baselines
/// (chains of 3 to 6 nodes, half of them with flipped edges).
std::vector<AxiomInstance> reference_transitivity_shots();

/// Zero-shot: "<premise> <hypothesis> <instruction>".
/// Multi-shot: header line, one "'<premise> <hypothesis>: <label>'" line per
/// shot, then the query without its label.
std::string emit_prompt(const AxiomInstance& inst, const PromptTemplate& tmpl);

}  // namespace causax
