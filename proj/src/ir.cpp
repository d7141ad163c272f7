#include "synth/ir.hpp"

#include <cassert>
#include <cstdio>

#include "synth/spec.hpp"

namespace synth {

const char* fop_symbol(FOp op) {
    switch (op) {
        case FOp::Add: return "+";
        case FOp::Sub: return "-";
        case FOp::Mul: return "*";
    }
    return "?";
}

namespace {

bool operand_in_env(const Operand& op, const Hole& hole, int regs_before) {
    if (op.kind == Operand::Kind::Reg) return op.index >= 0 && op.index < regs_before;
    for (const auto& e : hole.env)
        if (e == op) return true;
    return false;
}

}  // namespace

bool program_well_formed(const Program& p, std::string* why) {
    auto fail = [&](const std::string& msg) {
        if (why) *why = msg;
        return false;
    };
    const Skeleton& sk = *p.sk;
    if (p.fills.size() != sk.holes.size()) return fail("fill count mismatch");
    if (p.affine_choice.size() != sk.affine_sites.size()) return fail("affine choice count mismatch");
    for (size_t i = 0; i < sk.affine_sites.size(); ++i) {
        if (p.affine_choice[i] < 0 ||
            p.affine_choice[i] >= static_cast<int>(sk.affine_sites[i].candidates.size()))
            return fail("affine choice out of range");
    }
    for (size_t h = 0; h < sk.holes.size(); ++h) {
        const Hole& hole = sk.holes[h];
        const HoleFill& fill = p.fills[h];
        switch (fill.mode) {
            case HoleFill::Mode::Empty:
                if (hole.kind == Hole::Kind::StoreExpr || hole.kind == Hole::Kind::ReturnExpr)
                    return fail("store/return hole cannot be empty");
                break;
            case HoleFill::Mode::Bare:
                if (hole.kind != Hole::Kind::AccInit && hole.kind != Hole::Kind::ReturnExpr)
                    return fail("bare fill only at init/return holes");
                if (!operand_in_env(fill.bare, hole, 0)) return fail("bare operand out of scope");
                break;
            case HoleFill::Mode::Seq: {
                if (fill.instrs.empty() && (hole.kind == Hole::Kind::StoreExpr ||
                                            hole.kind == Hole::Kind::ReturnExpr))
                    return fail("store/return sequence must be nonempty");
                for (size_t k = 0; k < fill.instrs.size(); ++k) {
                    const Instr& ins = fill.instrs[k];
                    if (!operand_in_env(ins.lhs, hole, static_cast<int>(k)) ||
                        !operand_in_env(ins.rhs, hole, static_cast<int>(k)))
                        return fail("instruction operand out of scope");
                }
                break;
            }
        }
    }
    return true;
}

namespace {

struct Frame {
    std::vector<long long> induction;  // per loop
    std::vector<long long> bound;      // per loop, read at entry
    std::vector<double> load;          // per load slot
    std::vector<double> acc;           // per loop
    std::vector<bool> acc_defined;
    std::vector<double> regs;          // scratch for the current hole
};

enum class ExecStatus { Ok, Oob, Undef };

struct Interp {
    const Program& p;
    const Skeleton& sk;
    const TestCase& in;
    Frame frame;
    std::vector<std::vector<double>> buffers;

    ExecStatus operand_value(const Operand& op, double& out) const {
        switch (op.kind) {
            case Operand::Kind::Const0: out = 0.0; return ExecStatus::Ok;
            case Operand::Kind::Const1: out = 1.0; return ExecStatus::Ok;
            case Operand::Kind::Scalar: out = in.float_values[op.index]; return ExecStatus::Ok;
            case Operand::Kind::Load: out = frame.load[op.index]; return ExecStatus::Ok;
            case Operand::Kind::Acc:
                if (!frame.acc_defined[op.index]) return ExecStatus::Undef;
                out = frame.acc[op.index];
                return ExecStatus::Ok;
            case Operand::Kind::Reg: out = frame.regs[op.index]; return ExecStatus::Ok;
        }
        return ExecStatus::Undef;
    }

    // Runs a hole's instruction sequence; `result` is the last register.
    ExecStatus run_seq(const std::vector<Instr>& instrs, double& result) {
        for (size_t k = 0; k < instrs.size(); ++k) {
            double a, b;
            if (auto st = operand_value(instrs[k].lhs, a); st != ExecStatus::Ok) return st;
            if (auto st = operand_value(instrs[k].rhs, b); st != ExecStatus::Ok) return st;
            double v = 0;
            switch (instrs[k].op) {
                case FOp::Add: v = a + b; break;
                case FOp::Sub: v = a - b; break;
                case FOp::Mul: v = a * b; break;
            }
            frame.regs[k] = v;
        }
        result = instrs.empty() ? 0.0 : frame.regs[instrs.size() - 1];
        return ExecStatus::Ok;
    }

    ExecStatus affine_index(int site_idx, long long& out) const {
        const AffineSite& site = sk.affine_sites[site_idx];
        const IndexExpr& e = site.candidates[p.affine_choice[site_idx]];
        if (!e.product) {
            out = frame.induction[e.loop_a];
        } else {
            out = frame.induction[e.loop_a] * frame.bound[e.loop_b] + frame.induction[e.loop_b];
        }
        return ExecStatus::Ok;
    }

    RunResult run() {
        frame.induction.assign(sk.loops.size(), 0);
        frame.bound.assign(sk.loops.size(), 0);
        frame.load.assign(sk.loads.size(), 0.0);
        frame.acc.assign(sk.loops.size(), 0.0);
        frame.acc_defined.assign(sk.loops.size(), false);
        size_t max_regs = 1;
        for (const auto& f : p.fills)
            if (f.mode == HoleFill::Mode::Seq) max_regs = std::max(max_regs, f.instrs.size());
        frame.regs.assign(max_regs, 0.0);
        buffers = in.buffers;

        RunResult res;
        size_t pc = 0;
        while (pc < sk.code.size()) {
            const Stmt& st = sk.code[pc];
            switch (st.op) {
                case Stmt::Op::AccInit: {
                    const LoopSite& loop = sk.loops[st.index];
                    const HoleFill& fill = p.fills[loop.init_hole];
                    if (fill.mode == HoleFill::Mode::Bare) {
                        double v;
                        if (auto s = operand_value(fill.bare, v); s != ExecStatus::Ok)
                            return trap(s);
                        frame.acc[st.index] = v;
                        frame.acc_defined[st.index] = true;
                    } else if (fill.mode == HoleFill::Mode::Seq && !fill.instrs.empty()) {
                        double v;
                        if (auto s = run_seq(fill.instrs, v); s != ExecStatus::Ok) return trap(s);
                        frame.acc[st.index] = v;
                        frame.acc_defined[st.index] = true;
                    } else {
                        frame.acc_defined[st.index] = false;
                    }
                    break;
                }
                case Stmt::Op::LoopBegin: {
                    const LoopSite& loop = sk.loops[st.index];
                    long long b = in.int_values[loop.bound_param];
                    frame.bound[st.index] = b;
                    frame.induction[st.index] = 0;
                    if (b <= 0) {
                        pc = static_cast<size_t>(loop.code_end) + 1;
                        continue;
                    }
                    break;
                }
                case Stmt::Op::LoopEnd: {
                    const LoopSite& loop = sk.loops[st.index];
                    if (++frame.induction[st.index] < frame.bound[st.index]) {
                        pc = static_cast<size_t>(loop.code_begin) + 1;
                        continue;
                    }
                    break;
                }
                case Stmt::Op::Load: {
                    const LoadSite& ld = sk.loads[st.index];
                    long long idx = frame.induction[ld.loop];
                    const auto& buf = buffers[ld.array_param];
                    if (idx < 0 || idx >= static_cast<long long>(buf.size()))
                        return trap(ExecStatus::Oob);
                    frame.load[st.index] = buf[idx];
                    break;
                }
                case Stmt::Op::AffineLoad: {
                    const AffineSite& site = sk.affine_sites[st.index];
                    long long idx;
                    affine_index(st.index, idx);
                    const auto& buf = buffers[site.array_param];
                    if (idx < 0 || idx >= static_cast<long long>(buf.size()))
                        return trap(ExecStatus::Oob);
                    frame.load[site.load_slot] = buf[idx];
                    break;
                }
                case Stmt::Op::BodyHole: {
                    const LoopSite& loop = sk.loops[st.index];
                    const HoleFill& fill = p.fills[loop.body_hole];
                    if (fill.mode == HoleFill::Mode::Seq && !fill.instrs.empty()) {
                        double v;
                        if (auto s = run_seq(fill.instrs, v); s != ExecStatus::Ok) return trap(s);
                        frame.acc[st.index] = v;
                        frame.acc_defined[st.index] = true;
                    }
                    break;
                }
                case Stmt::Op::Store: {
                    const StoreSite& store = sk.stores[st.index];
                    const HoleFill& fill = p.fills[store.hole];
                    double v;
                    if (fill.mode == HoleFill::Mode::Bare) {
                        if (auto s = operand_value(fill.bare, v); s != ExecStatus::Ok)
                            return trap(s);
                    } else {
                        if (auto s = run_seq(fill.instrs, v); s != ExecStatus::Ok) return trap(s);
                    }
                    long long idx = frame.induction[store.loop];
                    auto& buf = buffers[store.array_param];
                    if (idx < 0 || idx >= static_cast<long long>(buf.size()))
                        return trap(ExecStatus::Oob);
                    buf[idx] = v;
                    break;
                }
                case Stmt::Op::Return: {
                    const HoleFill& fill = p.fills[sk.return_hole];
                    double v;
                    if (fill.mode == HoleFill::Mode::Bare) {
                        if (auto s = operand_value(fill.bare, v); s != ExecStatus::Ok)
                            return trap(s);
                    } else {
                        if (auto s = run_seq(fill.instrs, v); s != ExecStatus::Ok) return trap(s);
                    }
                    res.ret = v;
                    break;
                }
            }
            ++pc;
        }
        res.status = RunResult::Status::Ok;
        res.buffers = std::move(buffers);
        return res;
    }

    RunResult trap(ExecStatus s) {
        RunResult res;
        res.status = s == ExecStatus::Oob ? RunResult::Status::TrapOutOfBounds
                                          : RunResult::Status::TrapUndefined;
        return res;
    }
};

}  // namespace

RunResult interpret(const Program& p, const FunctionSpec& spec, const TestCase& inputs) {
    (void)spec;
    Interp interp{p, *p.sk, inputs, {}, {}};
    return interp.run();
}

namespace {

// Emission context: stable names for inductions, loads, accumulators, and
// a global counter for instruction registers.
struct Emitter {
    const Program& p;
    const Skeleton& sk;
    const FunctionSpec& spec;
    std::string out;
    int indent = 1;
    int next_temp = 0;
    std::vector<int> reg_names;  // hole-local reg -> global temp id (current hole)

    void line(const std::string& s) {
        for (int i = 0; i < indent; ++i) out += "  ";
        out += s;
        out += "\n";
    }

    std::string operand_str(const Operand& op) const {
        switch (op.kind) {
            case Operand::Kind::Const0: return "0.0";
            case Operand::Kind::Const1: return "1.0";
            case Operand::Kind::Scalar: return spec.signature.params[op.index].name;
            case Operand::Kind::Load: return "v" + std::to_string(op.index);
            case Operand::Kind::Acc: return "acc" + std::to_string(op.index);
            case Operand::Kind::Reg: return "t" + std::to_string(reg_names[op.index]);
        }
        return "?";
    }

    // Emits a sequence; returns the result value's name.
    std::string emit_seq(const std::vector<Instr>& instrs) {
        reg_names.assign(instrs.size(), -1);
        std::string last;
        for (size_t k = 0; k < instrs.size(); ++k) {
            std::string lhs = operand_str(instrs[k].lhs);
            std::string rhs = operand_str(instrs[k].rhs);
            int id = next_temp++;
            reg_names[k] = id;
            last = "t" + std::to_string(id);
            line("float " + last + " = " + lhs + " " + fop_symbol(instrs[k].op) + " " + rhs +
                 ";");
        }
        return last;
    }

    std::string index_str(const IndexExpr& e) const {
        std::string ia = "i" + std::to_string(e.loop_a);
        if (!e.product) return ia;
        std::string bound = spec.signature.params[sk.loops[e.loop_b].bound_param].name;
        return ia + " * " + bound + " + i" + std::to_string(e.loop_b);
    }

    void run() {
        out += spec.signature.return_type.to_string() + " " + sk.function_name + "(";
        for (size_t i = 0; i < spec.signature.params.size(); ++i) {
            if (i) out += ", ";
            const Param& prm = spec.signature.params[i];
            std::string t = prm.ctype.to_string();
            if (prm.ctype.is_pointer())
                t = prm.ctype.pointee().to_string() + "* ";
            else
                t += " ";
            out += t + prm.name;
        }
        out += ") {\n";
        for (size_t pc = 0; pc < sk.code.size(); ++pc) {
            const Stmt& st = sk.code[pc];
            switch (st.op) {
                case Stmt::Op::AccInit: {
                    const LoopSite& loop = sk.loops[st.index];
                    const HoleFill& fill = p.fills[loop.init_hole];
                    std::string acc = "acc" + std::to_string(st.index);
                    if (fill.mode == HoleFill::Mode::Bare) {
                        line("float " + acc + " = " + operand_str(fill.bare) + ";");
                    } else if (fill.mode == HoleFill::Mode::Seq && !fill.instrs.empty()) {
                        std::string v = emit_seq(fill.instrs);
                        line("float " + acc + " = " + v + ";");
                    } else {
                        line("float " + acc + ";");
                    }
                    break;
                }
                case Stmt::Op::LoopBegin: {
                    const LoopSite& loop = sk.loops[st.index];
                    std::string iv = "i" + std::to_string(st.index);
                    line("for (int " + iv + " = 0; " + iv + " < " +
                         spec.signature.params[loop.bound_param].name + "; ++" + iv + ") {");
                    ++indent;
                    break;
                }
                case Stmt::Op::LoopEnd:
                    --indent;
                    line("}");
                    break;
                case Stmt::Op::Load: {
                    const LoadSite& ld = sk.loads[st.index];
                    line("float v" + std::to_string(st.index) + " = " +
                         spec.signature.params[ld.array_param].name + "[i" +
                         std::to_string(ld.loop) + "];");
                    break;
                }
                case Stmt::Op::AffineLoad: {
                    const AffineSite& site = sk.affine_sites[st.index];
                    const IndexExpr& e = site.candidates[p.affine_choice[st.index]];
                    line("float v" + std::to_string(site.load_slot) + " = " +
                         spec.signature.params[site.array_param].name + "[" + index_str(e) +
                         "];");
                    break;
                }
                case Stmt::Op::BodyHole: {
                    const LoopSite& loop = sk.loops[st.index];
                    const HoleFill& fill = p.fills[loop.body_hole];
                    if (fill.mode == HoleFill::Mode::Seq && !fill.instrs.empty()) {
                        std::string v = emit_seq(fill.instrs);
                        line("acc" + std::to_string(st.index) + " = " + v + ";");
                    }
                    break;
                }
                case Stmt::Op::Store: {
                    const StoreSite& store = sk.stores[st.index];
                    const HoleFill& fill = p.fills[store.hole];
                    std::string v = fill.mode == HoleFill::Mode::Bare ? operand_str(fill.bare)
                                                                      : emit_seq(fill.instrs);
                    line(spec.signature.params[store.array_param].name + "[i" +
                         std::to_string(store.loop) + "] = " + v + ";");
                    break;
                }
                case Stmt::Op::Return: {
                    const HoleFill& fill = p.fills[sk.return_hole];
                    std::string v = fill.mode == HoleFill::Mode::Bare ? operand_str(fill.bare)
                                                                      : emit_seq(fill.instrs);
                    line("return " + v + ";");
                    break;
                }
            }
        }
        out += "}\n";
    }
};

std::string json_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out;
}

}  // namespace

std::string emit_c(const Program& p, const FunctionSpec& spec) {
    Emitter em{p, *p.sk, spec, {}, 1, 0, {}};
    em.run();
    return em.out;
}

std::string program_to_json(const Program& p, const FunctionSpec& spec) {
    const Skeleton& sk = *p.sk;
    std::string out = "{";
    out += "\"function\":\"" + json_escape(sk.function_name) + "\",";
    out += "\"composition\":\"" + json_escape(sk.comp_desc) + "\",";
    out += "\"affine\":[";
    for (size_t i = 0; i < sk.affine_sites.size(); ++i) {
        if (i) out += ",";
        const AffineSite& site = sk.affine_sites[i];
        const IndexExpr& e = site.candidates[p.affine_choice[i]];
        std::string idx = "i" + std::to_string(e.loop_a);
        if (e.product)
            idx += "*" + spec.signature.params[sk.loops[e.loop_b].bound_param].name + "+i" +
                   std::to_string(e.loop_b);
        out += "{\"array\":\"" + json_escape(spec.signature.params[site.array_param].name) +
               "\",\"index\":\"" + idx + "\"}";
    }
    out += "],\"holes\":[";
    auto operand_json = [&](const Operand& op) -> std::string {
        switch (op.kind) {
            case Operand::Kind::Const0: return "0.0";
            case Operand::Kind::Const1: return "1.0";
            case Operand::Kind::Scalar: return spec.signature.params[op.index].name;
            case Operand::Kind::Load: return "v" + std::to_string(op.index);
            case Operand::Kind::Acc: return "acc" + std::to_string(op.index);
            case Operand::Kind::Reg: return "r" + std::to_string(op.index);
        }
        return "?";
    };
    for (size_t h = 0; h < sk.holes.size(); ++h) {
        if (h) out += ",";
        const Hole& hole = sk.holes[h];
        const HoleFill& fill = p.fills[h];
        const char* kind = hole.kind == Hole::Kind::AccInit      ? "init"
                           : hole.kind == Hole::Kind::LoopBody   ? "body"
                           : hole.kind == Hole::Kind::StoreExpr  ? "store"
                                                                 : "return";
        out += std::string("{\"kind\":\"") + kind + "\",\"loop\":" + std::to_string(hole.loop);
        if (fill.mode == HoleFill::Mode::Empty) {
            out += ",\"fill\":\"empty\"";
        } else if (fill.mode == HoleFill::Mode::Bare) {
            out += ",\"fill\":\"bare\",\"value\":\"" + operand_json(fill.bare) + "\"";
        } else {
            out += ",\"fill\":\"seq\",\"instrs\":[";
            for (size_t k = 0; k < fill.instrs.size(); ++k) {
                if (k) out += ",";
                const Instr& ins = fill.instrs[k];
                out += "{\"dest\":\"r" + std::to_string(k) + "\",\"op\":\"";
                out += ins.op == FOp::Add ? "fadd" : ins.op == FOp::Sub ? "fsub" : "fmul";
                out += "\",\"lhs\":\"" + operand_json(ins.lhs) + "\",\"rhs\":\"" +
                       operand_json(ins.rhs) + "\"}";
            }
            out += "]";
        }
        out += "}";
    }
    out += "]}";
    return out;
}

}  // namespace synth
