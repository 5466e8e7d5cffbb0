#include "centra/text_io.hpp"

#include <charconv>

namespace centra {

namespace {

template <ExactField F>
AnyMatrix read_entries(const F& field, std::size_t rows, std::size_t cols, std::istream& is) {
  std::vector<ElementOf<F>> entries;
  entries.reserve(rows * cols);
  for (std::size_t i = 0; i < rows * cols; ++i) {
    std::string token;
    if (!(is >> token))
      fail(ErrorCode::ParseError, "matrix ended after " + std::to_string(i) + " of " + std::to_string(rows * cols) +
                                      " entries");
    entries.push_back(parse_scalar(field, token));
  }
  return Matrix<F>(field, rows, cols, std::move(entries));
}

std::size_t json_count(const nlohmann::json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_number_unsigned()) fail(ErrorCode::ParseError, std::string("missing ") + key);
  return j.at(key).get<std::size_t>();
}

}  // namespace

AnyMatrix read_matrix_text(std::istream& is) {
  std::size_t rows = 0, cols = 0;
  std::string selector;
  if (!(is >> rows >> cols >> selector)) fail(ErrorCode::ParseError, "expected header 'rows cols field'");
  const AnyField field = parse_field_selector(selector);
  return std::visit([&](const auto& f) { return read_entries(f, rows, cols, is); }, field);
}

AnyMatrix matrix_from_text(const std::string& text) {
  std::istringstream is(text);
  return read_matrix_text(is);
}

AnyMatrix matrix_from_json(const nlohmann::json& j) {
  const std::size_t rows = json_count(j, "rows");
  const std::size_t cols = json_count(j, "cols");
  if (!j.contains("field") || !j.at("field").is_string()) fail(ErrorCode::ParseError, "missing field");
  const AnyField field = parse_field_selector(j.at("field").get<std::string>());
  const auto& entries = j.at("entries");
  if (!entries.is_array() || entries.size() != rows) fail(ErrorCode::ShapeMismatch, "entries do not match rows");
  return std::visit(
      [&](const auto& f) -> AnyMatrix {
        using Field = std::decay_t<decltype(f)>;
        std::vector<ElementOf<Field>> flat;
        for (const auto& row : entries) {
          if (!row.is_array() || row.size() != cols) fail(ErrorCode::ShapeMismatch, "ragged entries");
          for (const auto& e : row) {
            if (e.is_number_integer())
              flat.push_back(f.from_int(e.get<std::int64_t>()));
            else if (e.is_string())
              flat.push_back(parse_scalar(f, e.get<std::string>()));
            else
              fail(ErrorCode::ParseError, "entry must be an integer or a string");
          }
        }
        return Matrix<Field>(f, rows, cols, std::move(flat));
      },
      field);
}

std::string encode_layout(const std::vector<ParameterLabel>& layout) {
  std::string out;
  for (std::size_t i = 0; i < layout.size(); ++i) {
    if (i) out += ',';
    const auto& l = layout[i];
    out += std::to_string(l.row_chain) + '.' + std::to_string(l.col_chain) + '.' + std::to_string(l.diagonal) + '.' +
           std::to_string(l.zc_index);
  }
  return out;
}

std::vector<ParameterLabel> decode_layout(std::string_view text) {
  std::vector<ParameterLabel> out;
  while (!text.empty()) {
    const auto comma = text.find(',');
    std::string_view item = text.substr(0, comma);
    std::size_t parts[4] = {0, 0, 0, 0};
    for (int k = 0; k < 4; ++k) {
      const auto dot = item.find('.');
      std::string_view num = item.substr(0, dot);
      auto [ptr, ec] = std::from_chars(num.data(), num.data() + num.size(), parts[k]);
      if (ec != std::errc() || ptr != num.data() + num.size() || num.empty() || (k < 3 && dot == std::string_view::npos))
        fail(ErrorCode::ParseError, "bad layout item '" + std::string(item) + "'");
      item = dot == std::string_view::npos ? std::string_view{} : item.substr(dot + 1);
    }
    out.push_back({parts[0], parts[1], parts[2], parts[3]});
    text = comma == std::string_view::npos ? std::string_view{} : text.substr(comma + 1);
  }
  return out;
}

}  // namespace centra
