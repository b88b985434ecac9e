#include "stepqa/templates.hpp"

#include "stepqa/errors.hpp"

namespace stepqa {

std::string to_string(PromptSchema s) {
  switch (s) {
    case PromptSchema::three_step: return "three_step";
    case PromptSchema::five_step: return "five_step";
    case PromptSchema::e2e: return "e2e";
  }
  return "three_step";
}

namespace templates {

namespace {

const std::string kPreambleTable =
    "Below is an instruction that describes a question answering task in the finance domain, "
    "paired with an input table and its relevant text that provide further context. The given "
    "question is relevant to the table and text. Generate an appropriate answer to the given "
    "question.";

const std::string kPreambleDoc =
    "Below is an instruction that describes a question answering task in the finance domain, "
    "paired with an input document that has one or multiple pages that provide further context. "
    "The given question is relevant to the document. Generate an appropriate answer to the given "
    "question.";

const std::string kThreeStepInstruction = R"TPL(Given a table and a list of texts in the following, what is the answer to the question? Please complete the task in three steps:
1. In the first step, extract the relevant numerical values from the provided table or texts. Store these in the variable `{evidence}`. If there are multiple values, separate them using the '#' symbol.
2. In the second step, generate an equation using the extracted numerical values. Store this equation in the variable `{equation}`.
3. In the third step, calculate the answer based on the equation and store it in the variable `{answer}`.
Please organize the results in the following table:
| step | output |
| 1 | {evidence} |
| 2 | {equation} |
| 3 | {answer} |
Finally, present the calculated answer in the format: "The answer is: {answer}")TPL";

// The five-step instruction differs between the table datasets and the
// document dataset only in its first and second sentences.
std::string five_step_instruction(bool document) {
  const std::string opening =
      document
          ? "Given a document that has one or multiple pages in the following, answer the "
            "question posed using the following five-step process:"
          : "Given a table and a list of texts in the following, answer the question posed using "
            "the following five-step process:";
  const std::string source = document ? "document" : "table or texts";
  return opening + "\n" +
         "1. Step 1: Predict the type of question being asked. Store this prediction in the "
         "variable `{question_type}`. The value of `{question_type}` can be one of the "
         "following:`Single span`, `Multiple spans`, `Count`, or `Arithmetic`.\n"
         "2. Step 2: Extract the relevant strings or numerical values from the provided " +
         source +
         ". Store these pieces of evidence in the variable `{evidence}`. If there are multiple "
         "pieces of evidence, separate them using the '#' symbol.\n"
         "3. Step 3: if the `{question_type}` is `Arithmetic`, formulate an equation using "
         "values stored in `{evidence}`. Store this equation in the variable `{equation}`. For "
         "all other question types, set the value of {equation} to 'N.A.'.\n"
         "4. Step 4: Predict or calculate the answer based on the question type, evidence and "
         "equation. Store it in the variable `{answer}`. If there are multiple values, separate "
         "them using the '#' symbol.\n"
         "5. Step 5: If the value of the `{answer}` is numerical, predict its scale and store "
         "it in a variable named `{scale}`. The value of `{scale}` can be one of the following: "
         "`none`, `percent`, `thousand`, `million`, or `billion`. For non-numerical values, set "
         "the value of `{scale}` to 'none'.\n"
         "Please organize the results in the following table:\n"
         "| step | output |\n"
         "| 1 | {question_type} |\n"
         "| 2 | {evidence} |\n"
         "| 3 | {equation} |\n"
         "| 4 | {answer} |\n"
         "| 5 | {scale} |\n"
         "Finally, present the final answer in the format: \"The answer is: {answer} #### and "
         "its corresponding scale is: {scale}\"";
}

std::string e2e_scaled_instruction(bool document) {
  const std::string opening =
      document ? "Given a document that has one or multiple pages in the following, what is the "
                 "answer to the question?"
               : "Given a table and a list of texts in the following, what is the answer to the "
                 "question?";
  return opening +
         " Please predict the answer and store it in a variable named `{answer}`. If there are "
         "multiple values, separate them using the '#' symbol. If the value of the `{answer}` "
         "is numerical, predict its scale and store it in a variable named `{scale}`. The value "
         "of `{scale}` can be one of the following: `none`, `percent`, `thousand`, `million`, "
         "or `billion`. For non-numerical values, set the value of `{scale}` to 'none'. "
         "Finally, present the final answer in the format of \"The answer is: {answer} #### and "
         "its corresponding scale is: {scale}\"";
}

std::string zero_shot_instruction(bool document, bool cot) {
  const std::string opening =
      document ? "Given a document with one or multiple pages in the following, what is the "
                 "answer to the question?"
               : "Given a table and a list of texts in the following, what is the answer to the "
                 "question?";
  const std::string cot_sentence = cot ? " Let's complete this task step by step." : "";
  return opening + cot_sentence +
         " Please output the answer in the format of \"The answer is:\".";
}

std::string section(const std::string& header, const std::string& body) {
  return "### " + header + "\n" + body + "\n\n";
}

std::string assemble(const std::string& preamble, const std::string& instruction_header,
                     const std::string& instruction, const std::string& table_md,
                     const std::string& content_header, const std::string& content,
                     const std::string& question) {
  std::string out = preamble + "\n\n";
  out += instruction_header + "\n" + instruction + "\n\n";
  if (!table_md.empty()) out += section("Table", table_md);
  out += section(content_header, content);
  out += section("Question", question);
  out += "### Response\n";
  return out;
}

}  // namespace

std::string stepwise_prompt(Dataset d, const std::string& table_md, const std::string& text,
                            const std::string& question) {
  switch (d) {
    case Dataset::finqa:
      return assemble(kPreambleTable, "### Instruction:", kThreeStepInstruction, table_md,
                      "Text", text, question);
    case Dataset::tatqa:
      return assemble(kPreambleTable, "### Instruction", five_step_instruction(false), table_md,
                      "Text", text, question);
    case Dataset::tatdqa:
      return assemble(kPreambleDoc, "### Instruction", five_step_instruction(true), "", "Text",
                      text, question);
  }
  throw Error("unknown dataset");
}

std::string e2e_prompt(Dataset d, const std::string& table_md, const std::string& text,
                       const std::string& question) {
  switch (d) {
    case Dataset::finqa:
      return assemble(kPreambleTable, "### Instruction", zero_shot_instruction(false, false),
                      table_md, "Text", text, question);
    case Dataset::tatqa:
      return assemble(kPreambleTable, "### Instruction", e2e_scaled_instruction(false), table_md,
                      "Text", text, question);
    case Dataset::tatdqa:
      return assemble(kPreambleDoc, "### Instruction", e2e_scaled_instruction(true), "",
                      "Document", text, question);
  }
  throw Error("unknown dataset");
}

std::string zero_shot_prompt(Dataset d, bool cot, const std::string& table_md,
                             const std::string& text, const std::string& question) {
  switch (d) {
    case Dataset::finqa:
    case Dataset::tatqa:
      return assemble(kPreambleTable, "### Instruction", zero_shot_instruction(false, cot),
                      table_md, "Text", text, question);
    case Dataset::tatdqa:
      return assemble(kPreambleDoc, "### Instruction", zero_shot_instruction(true, cot), "",
                      "Text", text, question);
  }
  throw Error("unknown dataset");
}

std::string final_statement(const std::string& answer) {
  return "The answer is: " + answer;
}

std::string final_statement_with_scale(const std::string& answer, const std::string& scale) {
  return "The answer is: " + answer + " #### and its corresponding scale is: " + scale;
}

}  // namespace templates

}  // namespace stepqa
