/*
   Copyright 2026 The defrost authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "defrost/verify.hpp"

namespace defrost::verify {

namespace {

void append_escaped(std::string& out, std::string_view s) {
    out += '"';
    for (char c : s) {
        switch (c) {
        case '"': out += "\\\""; break;
        case '\\': out += "\\\\"; break;
        case '\n': out += "\\n"; break;
        case '\t': out += "\\t"; break;
        default: out += c; break;
        }
    }
    out += '"';
}

void append_kv(std::string& out, int indent, std::string_view key, std::string_view value,
               bool quoted, bool last) {
    out.append(indent, ' ');
    append_escaped(out, key);
    out += ": ";
    if (quoted) {
        append_escaped(out, value);
    } else {
        out += value;
    }
    if (!last) {
        out += ',';
    }
    out += '\n';
}

} // namespace

std::string reports_to_json(std::span<const verify_report> reports) {
    if (reports.empty()) {
        return "[]";
    }
    std::string out = "[\n";
    for (std::size_t i = 0; i < reports.size(); ++i) {
        const verify_report& rep = reports[i];
        out += "  {\n";
        append_kv(out, 4, "identity", to_string(rep.id), true, false);

        out += "    \"params\": {\n";
        struct entry {
            std::string_view key;
            std::string value;
            bool quoted;
        };
        std::vector<entry> params;
        if (rep.params.u) {
            params.push_back({"u", rep.params.u->str(), true});
        }
        if (rep.params.lambda) {
            params.push_back({"lambda", rep.params.lambda->str(), true});
        }
        if (rep.params.r) {
            params.push_back({"r", std::to_string(*rep.params.r), false});
        }
        if (rep.params.d) {
            params.push_back({"d", std::to_string(*rep.params.d), false});
        }
        params.push_back({"max_n", std::to_string(rep.params.max_n), false});
        for (std::size_t j = 0; j < params.size(); ++j) {
            append_kv(out, 6, params[j].key, params[j].value, params[j].quoted,
                      j + 1 == params.size());
        }
        out += "    },\n";

        const bool has_failure = rep.first_failure.has_value();
        const bool has_reason = rep.status == check_status::skipped;
        const char* status = rep.status == check_status::pass     ? "pass"
                             : rep.status == check_status::fail   ? "fail"
                                                                  : "skipped";
        append_kv(out, 4, "status", status, true, !(has_failure || has_reason));
        if (has_failure) {
            const check_failure& f = *rep.first_failure;
            out += "    \"first_failure\": {\n";
            append_kv(out, 6, "n", std::to_string(f.n), false, false);
            const bool has_detail = !f.detail.empty();
            append_kv(out, 6, "lhs", f.lhs, true, false);
            append_kv(out, 6, "rhs", f.rhs, true, has_detail ? false : true);
            if (has_detail) {
                append_kv(out, 6, "detail", f.detail, true, true);
            }
            out += "    }\n";
        } else if (has_reason) {
            append_kv(out, 4, "reason", rep.skip_reason, true, true);
        }
        out += i + 1 == reports.size() ? "  }\n" : "  },\n";
    }
    out += "]";
    return out;
}

} // namespace defrost::verify
