// Copyright 2026 The hwproj Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "hwproj/circuit_io.h"

#include <cctype>
#include <charconv>
#include <optional>
#include <vector>

#include "hwproj/angles.h"

namespace hwproj {

ParseError::ParseError(size_t line, size_t column, const std::string &message)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
      line(line),
      column(column) {
}

namespace {

void emit_body(std::string &out, const Instruction &inst) {
    auto q = [](uint32_t i) {
        return "q" + std::to_string(i);
    };
    auto name = std::string(gate_name(inst.kind));
    switch (inst.kind) {
        case GateKind::H:
        case GateKind::X:
        case GateKind::RESET:
            out += name + " " + q(inst.qubits[0]);
            break;
        case GateKind::RY:
        case GateKind::RZ:
            out += name + "(" + format_angle(inst.angle) + ") " + q(inst.qubits[0]);
            break;
        case GateKind::GLOBAL_PHASE:
            out += name + "(" + format_angle(inst.angle) + ")";
            break;
        case GateKind::CX:
        case GateKind::CZ:
            out += name + " " + q(inst.qubits[0]) + ", " + q(inst.qubits[1]);
            break;
        case GateKind::CRZ:
            out += name + "(" + format_angle(inst.angle) + ") " + q(inst.qubits[0]) + ", " + q(inst.qubits[1]);
            break;
        case GateKind::MEASURE:
            out += name + " " + q(inst.qubits[0]) + " -> c" + std::to_string(inst.cbit);
            break;
        case GateKind::BARRIER:
            out += name;
            for (size_t i = 0; i < inst.qubits.size(); i++) {
                out += (i == 0 ? " " : ", ") + q(inst.qubits[i]);
            }
            break;
    }
}

// Cursor over one line. Columns are 1-based.
struct Line {
    std::string_view text;
    size_t number;
    size_t pos = 0;

    [[noreturn]] void fail(const std::string &message, std::optional<size_t> at = std::nullopt) const {
        throw ParseError(number, at.value_or(pos) + 1, message);
    }

    void skip_ws() {
        while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) {
            pos++;
        }
    }

    bool done() {
        skip_ws();
        return pos >= text.size();
    }

    bool accept(std::string_view token) {
        skip_ws();
        if (text.substr(pos).starts_with(token)) {
            pos += token.size();
            return true;
        }
        return false;
    }

    void expect(std::string_view token) {
        if (!accept(token)) {
            fail("expected `" + std::string(token) + "`");
        }
    }

    std::string_view word() {
        skip_ws();
        size_t start = pos;
        while (pos < text.size() && (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_')) {
            pos++;
        }
        return text.substr(start, pos - start);
    }

    uint32_t number_value() {
        skip_ws();
        size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            pos++;
        }
        uint32_t v = 0;
        auto [ptr, ec] = std::from_chars(text.data() + start, text.data() + pos, v);
        if (start == pos || ec != std::errc()) {
            fail("expected a non-negative integer", start);
        }
        (void)ptr;
        return v;
    }

    uint32_t index(char prefix, uint32_t bound, const char *what) {
        skip_ws();
        size_t start = pos;
        if (pos >= text.size() || text[pos] != prefix) {
            fail(std::string("expected a ") + what + " like `" + prefix + "0`");
        }
        pos++;
        if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos]))) {
            fail(std::string("expected a ") + what + " like `" + prefix + "0`", start);
        }
        uint32_t v = number_value();
        if (v >= bound) {
            fail(
                std::string(what) + " index " + std::to_string(v) + " out of range; " + std::to_string(bound) +
                    " declared",
                start);
        }
        return v;
    }

    double angle() {
        expect("(");
        size_t start = pos;
        auto close = text.find(')', pos);
        if (close == std::string_view::npos) {
            fail("unterminated angle", start);
        }
        auto body = text.substr(start, close - start);
        while (!body.empty() && (body.front() == ' ' || body.front() == '\t')) {
            body.remove_prefix(1);
            start++;
        }
        while (!body.empty() && (body.back() == ' ' || body.back() == '\t')) {
            body.remove_suffix(1);
        }
        auto v = parse_angle(body);
        if (!v) {
            fail("malformed angle `" + std::string(body) + "`", start);
        }
        pos = close + 1;
        return *v;
    }
};

struct Parser {
    Circuit circuit;
    std::vector<bool> written;

    Instruction unitary(Line &line, std::string_view name, size_t name_col) {
        uint32_t nq = circuit.num_qubits;
        if (name == "h") {
            return op::h(line.index('q', nq, "qubit"));
        }
        if (name == "x") {
            return op::x(line.index('q', nq, "qubit"));
        }
        if (name == "ry" || name == "rz") {
            double a = line.angle();
            uint32_t q = line.index('q', nq, "qubit");
            return name == "ry" ? op::ry(a, q) : op::rz(a, q);
        }
        if (name == "gphase") {
            return op::gphase(line.angle());
        }
        if (name == "cx" || name == "cz" || name == "crz") {
            double a = name == "crz" ? line.angle() : 0;
            uint32_t q0 = line.index('q', nq, "qubit");
            line.expect(",");
            size_t at = (line.skip_ws(), line.pos);
            uint32_t q1 = line.index('q', nq, "qubit");
            if (q0 == q1) {
                line.fail("two-qubit gate needs distinct qubits", at);
            }
            if (name == "cx") {
                return op::cx(q0, q1);
            }
            return name == "cz" ? op::cz(q0, q1) : op::crz(a, q0, q1);
        }
        line.fail("unknown mnemonic `" + std::string(name) + "`", name_col);
    }

    void instruction(Line &line) {
        line.skip_ws();
        size_t col = line.pos;
        auto name = line.word();
        if (name.empty()) {
            line.fail("expected an instruction");
        }
        uint32_t nq = circuit.num_qubits;
        if (name == "if") {
            line.expect("(");
            Condition cond;
            line.skip_ws();
            if (line.accept("parity")) {
                line.expect("(");
                do {
                    size_t at = (line.skip_ws(), line.pos);
                    uint32_t c = line.index('c', circuit.num_cbits, "cbit");
                    if (!written[c]) {
                        line.fail("cbit c" + std::to_string(c) + " is read before any measurement writes it", at);
                    }
                    cond.cbits.push_back(c);
                } while (line.accept(","));
                line.expect(")");
            } else {
                size_t at = (line.skip_ws(), line.pos);
                uint32_t c = line.index('c', circuit.num_cbits, "cbit");
                if (!written[c]) {
                    line.fail("cbit c" + std::to_string(c) + " is read before any measurement writes it", at);
                }
                cond.cbits.push_back(c);
            }
            line.expect("==");
            size_t at = (line.skip_ws(), line.pos);
            uint32_t v = line.number_value();
            if (v > 1) {
                line.fail("condition value must be 0 or 1", at);
            }
            cond.value = v == 1;
            line.expect(")");
            line.skip_ws();
            size_t inner_col = line.pos;
            auto inner_name = line.word();
            if (inner_name == "measure" || inner_name == "reset" || inner_name == "barrier" || inner_name == "if") {
                line.fail("only unitary instructions can be classically controlled", inner_col);
            }
            if (inner_name.empty()) {
                line.fail("expected an instruction after the condition");
            }
            auto inner = unitary(line, inner_name, inner_col);
            inner.condition = std::move(cond);
            finish(line, std::move(inner), col);
            return;
        }
        if (name == "measure") {
            uint32_t q = line.index('q', nq, "qubit");
            line.expect("->");
            uint32_t c = line.index('c', circuit.num_cbits, "cbit");
            written[c] = true;
            finish(line, op::measure(q, c), col);
            return;
        }
        if (name == "reset") {
            finish(line, op::reset(line.index('q', nq, "qubit")), col);
            return;
        }
        if (name == "barrier") {
            std::vector<uint32_t> qs;
            if (!line.done()) {
                do {
                    qs.push_back(line.index('q', nq, "qubit"));
                } while (line.accept(","));
            }
            finish(line, op::barrier(std::move(qs)), col);
            return;
        }
        finish(line, unitary(line, name, col), col);
    }

    void finish(Line &line, Instruction inst, size_t col) {
        if (!line.done()) {
            line.fail("unexpected trailing text");
        }
        try {
            circuit.push(std::move(inst));
        } catch (const std::invalid_argument &e) {
            line.fail(e.what(), col);
        }
    }
};

uint32_t header_value(Line &line, std::string_view key) {
    line.skip_ws();
    size_t col = line.pos;
    if (line.word() != key) {
        line.fail("expected `" + std::string(key) + " <count>` header", col);
    }
    uint32_t v = line.number_value();
    if (!line.done()) {
        line.fail("unexpected trailing text");
    }
    return v;
}

}  // namespace

std::string emit(const Circuit &circuit) {
    std::string out;
    out += "qubits " + std::to_string(circuit.num_qubits) + "\n";
    out += "cbits " + std::to_string(circuit.num_cbits) + "\n";
    for (const auto &inst : circuit.instructions) {
        if (inst.condition.has_value()) {
            out += "if (parity(";
            for (size_t i = 0; i < inst.condition->cbits.size(); i++) {
                out += (i == 0 ? "c" : ",c") + std::to_string(inst.condition->cbits[i]);
            }
            out += inst.condition->value ? ") == 1) " : ") == 0) ";
        }
        emit_body(out, inst);
        out += "\n";
    }
    return out;
}

Circuit parse(std::string_view text) {
    Parser parser;
    enum class Stage { VERSION, QUBITS, CBITS, BODY } stage = Stage::VERSION;
    size_t number = 0;
    size_t last_line = 1;
    while (!text.empty()) {
        auto eol = text.find('\n');
        auto raw = text.substr(0, eol);
        text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
        number++;
        last_line = number;
        if (!raw.empty() && raw.back() == '\r') {
            raw.remove_suffix(1);
        }
        if (auto hash = raw.find('#'); hash != std::string_view::npos) {
            raw = raw.substr(0, hash);
        }
        Line line{raw, number};
        if (line.done()) {
            continue;
        }
        switch (stage) {
            case Stage::VERSION: {
                size_t save = line.pos;
                if (line.word() == "version") {
                    size_t at = (line.skip_ws(), line.pos);
                    if (line.number_value() != 1) {
                        line.fail("unsupported format version", at);
                    }
                    if (!line.done()) {
                        line.fail("unexpected trailing text");
                    }
                    stage = Stage::QUBITS;
                    continue;
                }
                line.pos = save;
                [[fallthrough]];
            }
            case Stage::QUBITS:
                parser.circuit.num_qubits = header_value(line, "qubits");
                stage = Stage::CBITS;
                continue;
            case Stage::CBITS:
                parser.circuit.num_cbits = header_value(line, "cbits");
                parser.written.assign(parser.circuit.num_cbits, false);
                stage = Stage::BODY;
                continue;
            case Stage::BODY:
                parser.instruction(line);
                continue;
        }
    }
    if (stage != Stage::BODY) {
        throw ParseError(last_line, 1, "missing `qubits` / `cbits` header");
    }
    return std::move(parser.circuit);
}

}  // namespace hwproj
