#include "synth/skeleton.hpp"

#include <algorithm>
#include <cassert>

namespace synth {
namespace {

struct Lowerer {
    const std::vector<FragmentInstance>& frags;
    const FunctionSpec& spec;
    Skeleton sk;

    int param_pos(const Atom& a) const {
        const Param* p = spec.signature.find_param(a.text);
        assert(p);
        return p->position;
    }

    std::vector<Operand> canonical_env(std::vector<Operand> env) const {
        env.push_back(Operand{Operand::Kind::Const0, 0});
        env.push_back(Operand{Operand::Kind::Const1, 0});
        std::sort(env.begin(), env.end());
        env.erase(std::unique(env.begin(), env.end()), env.end());
        return env;
    }

    int add_hole(Hole::Kind kind, int loop, int store, const std::vector<Operand>& env) {
        Hole h;
        h.kind = kind;
        h.loop = loop;
        h.store = store;
        h.env = canonical_env(env);
        sk.holes.push_back(std::move(h));
        return static_cast<int>(sk.holes.size()) - 1;
    }

    // env: float values in scope at the current position, in definition
    // order (canonicalized per hole). Appends this node's contributions
    // that remain visible to later siblings.
    void lower_node(const CompNode& node, int parent_loop, std::vector<Operand>& env) {
        const FragmentInstance& frag = frags[node.frag_id];
        switch (frag.kind) {
            case FragmentKind::Loop:
            case FragmentKind::ZipLoop: {
                int loop_idx = static_cast<int>(sk.loops.size());
                sk.loops.push_back({});
                {
                    LoopSite& loop = sk.loops.back();
                    loop.frag_id = frag.id;
                    loop.parent = parent_loop;
                    loop.bound_param = param_pos(frag.bound());
                    loop.is_zip = frag.kind == FragmentKind::ZipLoop;
                    loop.array_x = param_pos(frag.array());
                    if (loop.is_zip) loop.array_y = param_pos(frag.zip_second_array());
                }

                int init_hole = add_hole(Hole::Kind::AccInit, loop_idx, -1, env);
                sk.loops[loop_idx].init_hole = init_hole;
                sk.code.push_back({Stmt::Op::AccInit, loop_idx});

                sk.loops[loop_idx].code_begin = static_cast<int>(sk.code.size());
                sk.code.push_back({Stmt::Op::LoopBegin, loop_idx});

                std::vector<Operand> inner = env;
                inner.push_back(Operand{Operand::Kind::Acc, loop_idx});

                int load_x = static_cast<int>(sk.loads.size());
                sk.loads.push_back({loop_idx, sk.loops[loop_idx].array_x, -1});
                sk.loops[loop_idx].load_x = load_x;
                sk.code.push_back({Stmt::Op::Load, load_x});
                inner.push_back(Operand{Operand::Kind::Load, load_x});
                if (sk.loops[loop_idx].is_zip) {
                    int load_y = static_cast<int>(sk.loads.size());
                    sk.loads.push_back({loop_idx, sk.loops[loop_idx].array_y, -1});
                    sk.loops[loop_idx].load_y = load_y;
                    sk.code.push_back({Stmt::Op::Load, load_y});
                    inner.push_back(Operand{Operand::Kind::Load, load_y});
                }

                for (const auto& child : node.children) lower_node(child, loop_idx, inner);

                int body_hole = add_hole(Hole::Kind::LoopBody, loop_idx, -1, inner);
                sk.loops[loop_idx].body_hole = body_hole;
                sk.code.push_back({Stmt::Op::BodyHole, loop_idx});

                sk.loops[loop_idx].code_end = static_cast<int>(sk.code.size());
                sk.code.push_back({Stmt::Op::LoopEnd, loop_idx});

                env.push_back(Operand{Operand::Kind::Acc, loop_idx});  // visible after the loop
                break;
            }
            case FragmentKind::Store: {
                int store_idx = static_cast<int>(sk.stores.size());
                StoreSite store;
                store.loop = parent_loop;
                store.array_param = param_pos(frag.array());
                store.hole = add_hole(Hole::Kind::StoreExpr, parent_loop, store_idx, env);
                sk.stores.push_back(store);
                sk.code.push_back({Stmt::Op::Store, store_idx});
                break;
            }
            case FragmentKind::AffineAccess: {
                // Loop ancestors, outermost first.
                std::vector<int> chain;
                for (int l = parent_loop; l != -1; l = sk.loops[l].parent) chain.push_back(l);
                std::reverse(chain.begin(), chain.end());
                assert(chain.size() >= 1 && chain.size() <= 2);

                AffineSite site;
                site.array_param = param_pos(frag.array());
                for (int l : chain) site.candidates.push_back(IndexExpr{false, l, -1});
                if (chain.size() == 2) {
                    site.candidates.push_back(IndexExpr{true, chain[0], chain[1]});
                    site.candidates.push_back(IndexExpr{true, chain[1], chain[0]});
                }
                int load_slot = static_cast<int>(sk.loads.size());
                site.load_slot = load_slot;
                int site_idx = static_cast<int>(sk.affine_sites.size());
                sk.loads.push_back({parent_loop, site.array_param, site_idx});
                sk.affine_sites.push_back(std::move(site));
                sk.code.push_back({Stmt::Op::AffineLoad, site_idx});
                env.push_back(Operand{Operand::Kind::Load, load_slot});
                break;
            }
        }
    }
};

}  // namespace

Skeleton lower(const Composition& comp, const std::vector<FragmentInstance>& frags,
               const FunctionSpec& spec) {
    Lowerer lw{frags, spec, {}};
    lw.sk.function_name = spec.signature.name;
    lw.sk.comp_desc = comp.to_string(frags);

    std::vector<Operand> env;
    for (const auto& p : spec.signature.params)
        if (p.ctype.kind == CType::Kind::Float)
            env.push_back(Operand{Operand::Kind::Scalar, p.position});

    for (const auto& root : comp.roots) lw.lower_node(root, -1, env);

    if (spec.signature.return_type.kind != CType::Kind::Void) {
        lw.sk.return_hole = lw.add_hole(Hole::Kind::ReturnExpr, -1, -1, env);
        lw.sk.code.push_back({Stmt::Op::Return, 0});
    }
    return lw.sk;
}

}  // namespace synth
