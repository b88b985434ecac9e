#include "stepqa/dataset.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "stepqa/errors.hpp"
#include "stepqa/text_util.hpp"

namespace stepqa {

using nlohmann::json;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

json parse_json(const std::string& content, const std::string& what) {
  try {
    return json::parse(content);
  } catch (const json::exception& e) {
    throw IoError("malformed JSON in " + what + ": " + e.what());
  }
}

const json& require(const json& j, const char* field, const std::string& record_id) {
  auto it = j.find(field);
  if (it == j.end())
    throw SchemaError(record_id, field,
                      "record " + record_id + " is missing field `" + std::string(field) + "`");
  return *it;
}

std::string require_string(const json& j, const char* field, const std::string& record_id) {
  const json& v = require(j, field, record_id);
  if (!v.is_string())
    throw SchemaError(record_id, field, "field `" + std::string(field) + "` of record " +
                                            record_id + " is not a string");
  return v.get<std::string>();
}

// JSON number -> exact Rational via the shortest round-trip decimal text.
Rational rational_from_json_number(const json& v) {
  auto parsed = parse_decimal(v.dump());
  if (parsed) return parsed->value;
  return rational_from_double(v.get<double>());
}

AnswerValue answer_from_json_value(const json& v, const std::string& record_id,
                                   const char* field) {
  if (v.is_number()) return AnswerValue::number(rational_from_json_number(v));
  if (v.is_string()) {
    const std::string s = v.get<std::string>();
    const std::string low = to_lower(trim(s));
    if (low == "yes") return AnswerValue::boolean(true);
    if (low == "no") return AnswerValue::boolean(false);
    return AnswerValue::text(trim(s));
  }
  if (v.is_array()) {
    std::vector<std::string> spans;
    for (const auto& e : v) {
      if (e.is_string()) spans.push_back(trim(e.get<std::string>()));
      else if (e.is_number()) spans.push_back(to_canonical_string(rational_from_json_number(e)));
      else
        throw SchemaError(record_id, field, "answer list of record " + record_id +
                                                " holds a non-string element");
    }
    return AnswerValue::spans(std::move(spans));
  }
  throw SchemaError(record_id, field,
                    "field `" + std::string(field) + "` of record " + record_id +
                        " has an unsupported JSON type");
}

Table table_from_2d(const json& rows, const std::string& record_id, const char* field) {
  if (!rows.is_array() || rows.empty())
    throw SchemaError(record_id, field, "table of record " + record_id + " is not a 2D array");
  Table t;
  for (const auto& row : rows) {
    if (!row.is_array())
      throw SchemaError(record_id, field, "table row of record " + record_id + " is not an array");
    std::vector<std::string> cells;
    for (const auto& cell : row) {
      if (cell.is_string()) cells.push_back(normalize_cell(cell.get<std::string>()));
      else cells.push_back(normalize_cell(cell.dump()));
    }
    t.rows.push_back(std::move(cells));
  }
  // Ragged releases are padded to the widest row so the Table invariant holds.
  size_t width = 0;
  for (const auto& r : t.rows) width = std::max(width, r.size());
  for (auto& r : t.rows) r.resize(width);
  t.validate();
  return t;
}

// Shared question-block reader for the tatqa/tatdqa releases.
QAInstance instance_from_tat_question(const json& q, Dataset dataset) {
  const std::string uid = require_string(q, "uid", "<question>");
  QAInstance inst;
  inst.id = uid;
  inst.dataset = dataset;
  inst.question = require_string(q, "question", uid);

  const std::string type_surface = require_string(q, "answer_type", uid);
  const auto qt = try_question_type_parse(type_surface);
  if (!qt)
    throw SchemaError(uid, "answer_type",
                      "record " + uid + " has unknown answer_type `" + type_surface + "`");
  inst.gold_question_type = qt;

  const json& scale = require(q, "scale", uid);
  if (!scale.is_string())
    throw SchemaError(uid, "scale", "field `scale` of record " + uid + " is not a string");
  const std::string scale_surface = trim(scale.get<std::string>());
  if (scale_surface.empty()) {
    inst.gold_scale = Scale::none;  // the releases encode `none` as ""
  } else {
    const auto s = try_scale_parse(scale_surface);
    if (!s)
      throw SchemaError(uid, "scale",
                        "record " + uid + " has unknown scale `" + scale_surface + "`");
    inst.gold_scale = s;
  }

  inst.gold_answer = answer_from_json_value(require(q, "answer", uid), uid, "answer");
  if (*qt == QuestionType::arithmetic || *qt == QuestionType::count) {
    // numeric answers may arrive as strings
    if (inst.gold_answer.kind() == AnswerValue::Kind::text) {
      if (auto dec = parse_decimal(inst.gold_answer.as_text()))
        inst.gold_answer = AnswerValue::number(dec->value);
    }
  }

  auto it = q.find("derivation");
  if (it != q.end() && it->is_string()) inst.gold_derivation = it->get<std::string>();
  return inst;
}

std::vector<std::string> ordered_texts(const json& blocks, const char* text_field,
                                       const std::string& record_id) {
  std::vector<std::pair<int, std::string>> ordered;
  int fallback_order = 0;
  for (const auto& block : blocks) {
    int order = fallback_order++;
    if (auto it = block.find("order"); it != block.end() && it->is_number_integer())
      order = it->get<int>();
    ordered.emplace_back(order, require_string(block, text_field, record_id));
  }
  std::stable_sort(ordered.begin(), ordered.end(),
                   [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<std::string> out;
  out.reserve(ordered.size());
  for (auto& [_, text] : ordered) out.push_back(std::move(text));
  return out;
}

}  // namespace

std::vector<QAInstance> load_finqa_json(const std::string& content) {
  const json root = parse_json(content, "finqa file");
  if (!root.is_array()) throw IoError("finqa file is not a JSON array");
  std::vector<QAInstance> out;
  out.reserve(root.size());
  for (const auto& rec : root) {
    const std::string id = require_string(rec, "id", "<record>");
    QAInstance inst;
    inst.id = id;
    inst.dataset = Dataset::finqa;
    inst.table = table_from_2d(require(rec, "table", id), id, "table");
    for (const char* field : {"pre_text", "post_text"}) {
      const json& texts = require(rec, field, id);
      if (!texts.is_array())
        throw SchemaError(id, field, "field `" + std::string(field) + "` of record " + id +
                                         " is not an array");
      for (const auto& t : texts) {
        if (!t.is_string())
          throw SchemaError(id, field, "text of record " + id + " is not a string");
        inst.texts.push_back(t.get<std::string>());
      }
    }
    const json& qa = require(rec, "qa", id);
    inst.question = require_string(qa, "question", id);
    inst.gold_derivation = require_string(qa, "program", id);  // program string, verbatim
    if (auto it = qa.find("exe_ans"); it != qa.end() && !it->is_null()) {
      inst.gold_answer = answer_from_json_value(*it, id, "exe_ans");
    } else {
      inst.gold_answer = answer_from_json_value(require(qa, "answer", id), id, "answer");
    }
    inst.validate();
    out.push_back(std::move(inst));
  }
  return out;
}

std::vector<QAInstance> load_tatqa_json(const std::string& content) {
  const json root = parse_json(content, "tatqa file");
  if (!root.is_array()) throw IoError("tatqa file is not a JSON array");
  std::vector<QAInstance> out;
  for (const auto& ctx : root) {
    const json& table_block = require(ctx, "table", "<context>");
    const std::string table_uid = require_string(table_block, "uid", "<table>");
    Table table = table_from_2d(require(table_block, "table", table_uid), table_uid, "table");

    const json& paragraphs = require(ctx, "paragraphs", table_uid);
    auto texts = ordered_texts(paragraphs, "text", table_uid);

    for (const auto& q : require(ctx, "questions", table_uid)) {
      QAInstance inst = instance_from_tat_question(q, Dataset::tatqa);
      inst.table = table;
      inst.texts = texts;
      inst.validate();
      out.push_back(std::move(inst));
    }
  }
  return out;
}

std::vector<QAInstance> load_tatdqa_json(const std::string& content) {
  const json root = parse_json(content, "tatdqa file");
  if (!root.is_array()) throw IoError("tatdqa file is not a JSON array");
  std::vector<QAInstance> out;
  for (const auto& doc_block : root) {
    const json& doc = require(doc_block, "doc", "<doc>");
    const std::string doc_uid = require_string(doc, "uid", "<doc>");
    const json& pages = require(doc, "pages", doc_uid);
    if (!pages.is_array())
      throw SchemaError(doc_uid, "pages", "field `pages` of doc " + doc_uid + " is not an array");
    auto texts = ordered_texts(pages, "text", doc_uid);

    for (const auto& q : require(doc_block, "questions", doc_uid)) {
      QAInstance inst = instance_from_tat_question(q, Dataset::tatdqa);
      inst.texts = texts;  // all page contents, in page order
      inst.validate();
      out.push_back(std::move(inst));
    }
  }
  return out;
}

std::vector<QAInstance> load_finqa(const std::string& path) {
  return load_finqa_json(read_file(path));
}
std::vector<QAInstance> load_tatqa(const std::string& path) {
  return load_tatqa_json(read_file(path));
}
std::vector<QAInstance> load_tatdqa(const std::string& path) {
  return load_tatdqa_json(read_file(path));
}

std::vector<QAInstance> load_dataset(Dataset d, const std::string& path) {
  switch (d) {
    case Dataset::finqa: return load_finqa(path);
    case Dataset::tatqa: return load_tatqa(path);
    case Dataset::tatdqa: return load_tatdqa(path);
  }
  throw Error("unknown dataset");
}

SplitStats stats(Dataset d, const std::string& split, const std::vector<QAInstance>& instances) {
  return SplitStats{d, split, instances.size()};
}

std::string schema_version(Dataset d) {
  switch (d) {
    case Dataset::finqa: return "finqa-release-v1";
    case Dataset::tatqa: return "tatqa-release-v1";
    case Dataset::tatdqa: return "tatdqa-release-v1";
  }
  return "unknown";
}

}  // namespace stepqa
