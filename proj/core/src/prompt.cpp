#include "causax/prompt.hpp"

#include "causax/error.hpp"
#include "causax/text.hpp"

namespace causax {

void PromptTemplate::validate() const {
  if (mode == PromptMode::MultiShot && shots.empty()) {
    throw ValidationError("a multi-shot prompt needs at least one shot");
  }
  if (mode == PromptMode::ZeroShot && !shots.empty()) {
    throw ValidationError("a zero-shot prompt takes no shots");
  }
}

PromptTemplate zero_shot_template() { return {PromptMode::ZeroShot, {}, kZeroShotInstruction}; }

PromptTemplate multi_shot_template(std::vector<AxiomInstance> shots) {
  PromptTemplate t{PromptMode::MultiShot, std::move(shots), kMultiShotHeader};
  t.validate();
  return t;
}

std::vector<AxiomInstance> reference_transitivity_shots() {
  static constexpr const char* kShots[] = {
      "5e0 causes vAf. vAf causes VO. Does vAf cause VO?: Yes",
      "5e0 causes vAf. vAf causes VO. Does vAf cause 5e0?: No",
      "e0F causes Z. Z causes 0U. 0U causes mR. mR causes 1L. Does mR cause 1L?: Yes",
      "e0F causes Z. Z causes 0U. 0U causes mR. mR causes 1L. Does Z cause e0F?: No",
      "b causes K. K causes qPv. 5 causes qPv. Does b cause qPv?: Yes",
      "b causes K. K causes qPv. 5 causes qPv. Does b cause 5?: No",
      "Mhb causes t0a. 6Eh causes Mhb. NS causes 6Eh. n causes NS. n causes xu. Does xu cause 6Eh?: No",
      "Mhb causes t0a. 6Eh causes Mhb. NS causes 6Eh. n causes NS. n causes xu. Does n cause NS?: Yes",
  };
  std::vector<AxiomInstance> out;
  for (const char* s : kShots) out.push_back(instance_from_text(s));
  return out;
}

std::string emit_prompt(const AxiomInstance& inst, const PromptTemplate& tmpl) {
  tmpl.validate();
  const std::string question = question_text(inst.graph, inst.hypothesis);
  if (tmpl.mode == PromptMode::ZeroShot) {
    return tmpl.instruction_text.empty() ? question : question + ' ' + tmpl.instruction_text;
  }
  std::string out = tmpl.instruction_text;
  out += '\n';
  for (const auto& shot : tmpl.shots) {
    out += '\'';
    out += question_text(shot.graph, shot.hypothesis);
    out += ": ";
    out += to_string(shot.label);
    out += "'\n";
  }
  out += question;
  return out;
}

}  // namespace causax
