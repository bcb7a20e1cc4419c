#include "netsamp/csv.hpp"

namespace netsamp::csv {

bool read_record(std::istream& in, std::vector<std::string>& fields) {
    fields.clear();
    int c = in.get();
    if (c == std::istream::traits_type::eof()) return false;

    std::string field;
    bool quoted = false;
    for (;;) {
        if (c == std::istream::traits_type::eof()) break;
        char ch = static_cast<char>(c);
        if (quoted) {
            if (ch == '"') {
                int peek = in.peek();
                if (peek == '"') {
                    field.push_back('"');
                    in.get();
                } else {
                    quoted = false;
                }
            } else {
                field.push_back(ch);
            }
        } else if (ch == '"' && field.empty()) {
            quoted = true;
        } else if (ch == ',') {
            fields.push_back(std::move(field));
            field.clear();
        } else if (ch == '\n') {
            break;
        } else if (ch == '\r') {
            // swallow CR of CRLF
            if (in.peek() == '\n') {
                in.get();
                break;
            }
            field.push_back(ch);
        } else {
            field.push_back(ch);
        }
        c = in.get();
    }
    fields.push_back(std::move(field));
    return true;
}

void write_field(std::ostream& out, const std::string& field) {
    bool needs_quote = field.find_first_of(",\"\r\n") != std::string::npos;
    if (!needs_quote) {
        out << field;
        return;
    }
    out << '"';
    for (char ch : field) {
        if (ch == '"') out << "\"\"";
        else out << ch;
    }
    out << '"';
}

void write_record(std::ostream& out, const std::vector<std::string>& fields) {
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i) out << ',';
        write_field(out, fields[i]);
    }
    out << '\n';
}

} // namespace netsamp::csv
