#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "schurq/atomic.hpp"
#include "schurq/bwb.hpp"
#include "schurq/chern.hpp"
#include "schurq/kbc.hpp"
#include "schurq/koszul.hpp"
#include "schurq/serialize.hpp"
#include "schurq/verify.hpp"

namespace py = pybind11;
using namespace schurq;

namespace {

Weight4 parse4(const std::string& s) { return Weight4::parse(s); }

py::object big_to_py(const BigInt& v) {
    // route through the decimal string so values never truncate
    return py::int_(py::str(v.to_string()));
}

py::dict coh_to_dict(const CohClass& c) {
    py::dict d;
    d["a0"] = c.a0.to_string();
    d["a1"] = c.a1.to_string();
    d["a2"] = c.a2.to_string();
    d["a3"] = c.a3.to_string();
    d["a4"] = c.a4.to_string();
    d["a5"] = c.a5.to_string();
    return d;
}

py::list irrep_sum_to_list(const IrrepSum<Weight6>& sum) {
    py::list out;
    for (const auto& [w, mult] : sum) {
        py::dict rec;
        rec["weight"] = w.to_string();
        rec["mult"] = big_to_py(mult);
        rec["dim"] = big_to_py(weyl_dim(w));
        out.append(rec);
    }
    return out;
}

}  // namespace

PYBIND11_MODULE(pyschurq, m) {
    m.doc() = "exact invariants of Schur-functor bundles on the Fano variety of lines";

    m.def("weyl_dim", [](const std::string& lambda) {
        return big_to_py(weyl_dim_sl4(parse4(lambda)));
    }, py::arg("lam"), "dimension of the SL(4) module for a dominant weight 'a,b,c,d'");

    m.def("weyl_dim6", [](const std::vector<int>& nu) {
        if (nu.size() != 6) throw std::invalid_argument("expected six entries");
        return big_to_py(weyl_dim_sl6({nu[0], nu[1], nu[2], nu[3], nu[4], nu[5]}));
    });

    m.def("pieri", [](const std::string& lambda, int boxes) {
        py::dict out;
        for (const auto& [w, mult] : pieri(parse4(lambda), boxes))
            out[py::str(w.to_string())] = big_to_py(mult);
        return out;
    });

    m.def("littlewood_richardson", [](const std::string& lambda, const std::string& mu) {
        py::dict out;
        for (const auto& [w, mult] : littlewood_richardson(parse4(lambda), parse4(mu)))
            out[py::str(w.to_string())] = big_to_py(mult);
        return out;
    });

    m.def("end_decomposition", [](const std::string& lambda) {
        return irrep_sum_to_list(end_decomposition(parse4(lambda)));
    });

    m.def("bwb", [](const std::string& weight) {
        BwbResult r = bwb(Weight6::parse(weight));
        py::dict out;
        out["acyclic"] = r.acyclic;
        if (!r.acyclic) {
            out["degree"] = r.degree;
            out["weight"] = r.weight_string();
            out["dim"] = big_to_py(r.dim);
        }
        return out;
    });

    m.def("chern", [](const std::string& lambda) {
        return coh_to_dict(ch_schur_closed(parse4(lambda)));
    });

    m.def("chern_oracle", [](const std::string& lambda) {
        return coh_to_dict(ch_schur_oracle(parse4(lambda)));
    });

    m.def("delta", [](const std::string& lambda) {
        return delta_general(parse4(lambda)).to_string();
    });

    m.def("chi", [](const std::string& lambda) { return big_to_py(chi_end(parse4(lambda))); });

    m.def("is_atomic", [](const std::string& lambda) { return is_atomic(parse4(lambda)); });

    m.def("atomic_numeric_test", [](const std::string& lambda) {
        return atomic_numeric_test(parse4(lambda)).to_string();
    });

    m.def("ext", [](const std::string& lambda) {
        ExtReport rep = ext_report(parse4(lambda));
        py::dict out;
        py::list ext, provenance;
        for (const ExtValue& v : rep.ext) {
            if (v.exact)
                ext.append(big_to_py(v.value));
            else
                ext.append(py::make_tuple(big_to_py(v.lower), big_to_py(v.upper)));
            provenance.append(to_string(v.provenance));
        }
        out["ext"] = ext;
        out["provenance"] = provenance;
        out["chi"] = big_to_py(rep.chi);
        out["exact"] = rep.all_exact();
        return out;
    });

    m.def("k_set", [](const std::string& lambda) {
        return irrep_sum_to_list(k_set(parse4(lambda)));
    });

    m.def("k_cardinality", [](int b, int c, int a) { return big_to_py(k_cardinality(b, c, a)); });

    m.def("f_poly", [](int b, int c) { return big_to_py(f_poly(b, c)); });

    m.def("verify", [](int max_lambda1) {
        verify::Options opts;
        opts.max_lambda1 = max_lambda1;
        py::list out;
        for (const auto& r : verify::run_all(opts)) {
            py::dict d;
            d["name"] = r.name;
            d["pass"] = r.pass;
            d["detail"] = r.detail;
            d["seconds"] = r.seconds;
            out.append(d);
        }
        return out;
    }, py::arg("max_lambda1") = 8);
}
