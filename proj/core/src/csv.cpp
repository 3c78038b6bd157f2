#include <heatansatz/csv.hpp>

#include <cstdio>
#include <stdexcept>

namespace heatansatz
{

std::string format_double(double value)
{
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", value);
    return buf;
}

namespace
{

std::string quote(const std::string& field)
{
    if (field.find_first_of(",\"\n\r") == std::string::npos) {
        return field;
    }
    std::string out = "\"";
    for (const char c : field) {
        if (c == '"') {
            out += '"';
        }
        out += c;
    }
    return out + "\"";
}

void append_line(std::string& out, const std::vector<std::string>& fields)
{
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i > 0) {
            out += ',';
        }
        out += quote(fields[i]);
    }
    out += '\n';
}

} // namespace

std::string emit_csv(const std::vector<std::string>& header, const std::vector<std::vector<std::string>>& rows)
{
    std::string out;
    append_line(out, header);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != header.size()) {
            throw std::invalid_argument("row " + std::to_string(r + 1) + " has " + std::to_string(rows[r].size()) +
                                        " fields, header has " + std::to_string(header.size()));
        }
        append_line(out, rows[r]);
    }
    return out;
}

std::string emit_csv(const std::vector<std::string>& header, const std::vector<std::vector<double>>& rows)
{
    std::vector<std::vector<std::string>> text;
    text.reserve(rows.size());
    for (const auto& row : rows) {
        std::vector<std::string> fields;
        fields.reserve(row.size());
        for (const double v : row) {
            fields.push_back(format_double(v));
        }
        text.push_back(std::move(fields));
    }
    return emit_csv(header, text);
}

std::string grid_csv(const std::function<double(double, double)>& f, const std::vector<double>& z,
                     const std::vector<double>& t)
{
    std::vector<std::vector<double>> rows;
    rows.reserve(z.size() * t.size());
    for (const double tt : t) {
        for (const double zz : z) {
            rows.push_back({tt, zz, f(zz, tt)});
        }
    }
    return emit_csv({"t", "z", "value"}, rows);
}

std::string trajectory_csv(const std::vector<DynState<double>>& states)
{
    std::vector<std::string> header{"t"};
    const std::size_t dim = states.empty() ? 0 : states.front().x.size();
    for (std::size_t k = 1; k <= dim; ++k) {
        header.push_back("x" + std::to_string(k));
    }
    std::vector<std::vector<double>> rows;
    rows.reserve(states.size());
    for (const auto& s : states) {
        std::vector<double> row{s.t};
        row.insert(row.end(), s.x.begin(), s.x.end());
        rows.push_back(std::move(row));
    }
    return emit_csv(header, rows);
}

} // namespace heatansatz
