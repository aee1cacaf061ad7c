// Weighted matching by Edmonds' blossom method with primal-dual updates,
// O(V^3) on dense graphs. Layout follows the classic formulation with
// endpoint indices p (edge p/2, vertex endpoint[p]).

#include <algorithm>
#include <vector>

#include "ttp/graph.hpp"

namespace ttp {

namespace {

class BlossomSolver {
public:
    BlossomSolver(const std::vector<double>& w, int k, bool maxcard)
        : nv_(k), maxcard_(maxcard)
    {
        for (int i = 0; i < k; ++i)
            for (int j = i + 1; j < k; ++j) {
                ei_.push_back(i);
                ej_.push_back(j);
                ew_.push_back(w[static_cast<size_t>(i) * k + j]);
            }
        ne_ = static_cast<int>(ew_.size());
        endpoint_.resize(2 * ne_);
        neighbend_.assign(nv_, {});
        for (int e = 0; e < ne_; ++e) {
            endpoint_[2 * e] = ei_[e];
            endpoint_[2 * e + 1] = ej_[e];
            neighbend_[ei_[e]].push_back(2 * e + 1);
            neighbend_[ej_[e]].push_back(2 * e);
        }
        double maxw = 0.0;
        for (double x : ew_)
            maxw = std::max(maxw, x);
        mate_.assign(nv_, -1);
        label_.assign(2 * nv_, 0);
        labelend_.assign(2 * nv_, -1);
        inblossom_.resize(nv_);
        for (int v = 0; v < nv_; ++v)
            inblossom_[v] = v;
        bparent_.assign(2 * nv_, -1);
        bchilds_.assign(2 * nv_, {});
        bbase_.assign(2 * nv_, -1);
        for (int v = 0; v < nv_; ++v)
            bbase_[v] = v;
        bendps_.assign(2 * nv_, {});
        bestedge_.assign(2 * nv_, -1);
        bbest_.assign(2 * nv_, {});
        has_bbest_.assign(2 * nv_, false);
        for (int b = nv_; b < 2 * nv_; ++b)
            unused_.push_back(b);
        dual_.assign(2 * nv_, 0.0);
        for (int v = 0; v < nv_; ++v)
            dual_[v] = maxw;
        allow_.assign(ne_, false);
    }

    std::vector<int> run()
    {
        for (int round = 0; round < nv_; ++round) {
            std::fill(label_.begin(), label_.end(), 0);
            std::fill(bestedge_.begin(), bestedge_.end(), -1);
            for (int b = nv_; b < 2 * nv_; ++b) {
                bbest_[b].clear();
                has_bbest_[b] = false;
            }
            std::fill(allow_.begin(), allow_.end(), false);
            queue_.clear();
            for (int v = 0; v < nv_; ++v)
                if (mate_[v] == -1 && label_[inblossom_[v]] == 0)
                    assign_label(v, 1, -1);
            bool augmented = false;
            for (;;) {
                while (!queue_.empty() && !augmented) {
                    int v = queue_.back();
                    queue_.pop_back();
                    for (int p : neighbend_[v]) {
                        int e = p / 2;
                        int w = endpoint_[p];
                        if (inblossom_[v] == inblossom_[w])
                            continue;
                        double kslack = 0.0;
                        if (!allow_[e]) {
                            kslack = slack(e);
                            if (kslack <= 0)
                                allow_[e] = true;
                        }
                        if (allow_[e]) {
                            if (label_[inblossom_[w]] == 0) {
                                assign_label(w, 2, p ^ 1);
                            } else if (label_[inblossom_[w]] == 1) {
                                int base = scan_blossom(v, w);
                                if (base >= 0) {
                                    add_blossom(base, e);
                                } else {
                                    augment_matching(e);
                                    augmented = true;
                                    break;
                                }
                            } else if (label_[w] == 0) {
                                label_[w] = 2;
                                labelend_[w] = p ^ 1;
                            }
                        } else if (label_[inblossom_[w]] == 1) {
                            int b = inblossom_[v];
                            if (bestedge_[b] == -1 || kslack < slack(bestedge_[b]))
                                bestedge_[b] = e;
                        } else if (label_[w] == 0) {
                            if (bestedge_[w] == -1 || kslack < slack(bestedge_[w]))
                                bestedge_[w] = e;
                        }
                    }
                }
                if (augmented)
                    break;

                int dtype = -1;
                double delta = 0.0;
                int dedge = -1, dblossom = -1;
                if (!maxcard_) {
                    dtype = 1;
                    delta = *std::min_element(dual_.begin(), dual_.begin() + nv_);
                }
                for (int v = 0; v < nv_; ++v)
                    if (label_[inblossom_[v]] == 0 && bestedge_[v] != -1) {
                        double d = slack(bestedge_[v]);
                        if (dtype == -1 || d < delta) {
                            delta = d;
                            dtype = 2;
                            dedge = bestedge_[v];
                        }
                    }
                for (int b = 0; b < 2 * nv_; ++b)
                    if (bparent_[b] == -1 && label_[b] == 1 && bestedge_[b] != -1) {
                        double d = slack(bestedge_[b]) / 2;
                        if (dtype == -1 || d < delta) {
                            delta = d;
                            dtype = 3;
                            dedge = bestedge_[b];
                        }
                    }
                for (int b = nv_; b < 2 * nv_; ++b)
                    if (bbase_[b] >= 0 && bparent_[b] == -1 && label_[b] == 2 &&
                        (dtype == -1 || dual_[b] < delta)) {
                        delta = dual_[b];
                        dtype = 4;
                        dblossom = b;
                    }
                if (dtype == -1) {
                    dtype = 1;
                    delta = std::max(0.0, *std::min_element(dual_.begin(), dual_.begin() + nv_));
                }
                // rounding can leave an already-tight edge with a tiny negative slack
                if (delta < 0)
                    delta = 0;

                for (int v = 0; v < nv_; ++v) {
                    int l = label_[inblossom_[v]];
                    if (l == 1)
                        dual_[v] -= delta;
                    else if (l == 2)
                        dual_[v] += delta;
                }
                for (int b = nv_; b < 2 * nv_; ++b)
                    if (bbase_[b] >= 0 && bparent_[b] == -1) {
                        if (label_[b] == 1)
                            dual_[b] += delta;
                        else if (label_[b] == 2)
                            dual_[b] -= delta;
                    }

                if (dtype == 1) {
                    break;
                } else if (dtype == 2) {
                    allow_[dedge] = true;
                    int i = ei_[dedge], j = ej_[dedge];
                    if (label_[inblossom_[i]] == 0)
                        std::swap(i, j);
                    queue_.push_back(i);
                } else if (dtype == 3) {
                    allow_[dedge] = true;
                    queue_.push_back(ei_[dedge]);
                } else {
                    expand_blossom(dblossom, false);
                }
            }
            if (!augmented)
                break;
            for (int b = nv_; b < 2 * nv_; ++b)
                if (bparent_[b] == -1 && bbase_[b] >= 0 && label_[b] == 1 && dual_[b] <= 0)
                    expand_blossom(b, true);
        }
        std::vector<int> out(nv_, -1);
        for (int v = 0; v < nv_; ++v)
            if (mate_[v] >= 0)
                out[v] = endpoint_[mate_[v]];
        return out;
    }

private:
    double slack(int e) const { return dual_[ei_[e]] + dual_[ej_[e]] - 2 * ew_[e]; }

    void leaves(int b, std::vector<int>& out) const
    {
        if (b < nv_) {
            out.push_back(b);
            return;
        }
        for (int t : bchilds_[b])
            leaves(t, out);
    }

    std::vector<int> leaves(int b) const
    {
        std::vector<int> out;
        leaves(b, out);
        return out;
    }

    void assign_label(int w, int t, int p)
    {
        int b = inblossom_[w];
        label_[w] = label_[b] = t;
        labelend_[w] = labelend_[b] = p;
        bestedge_[w] = bestedge_[b] = -1;
        if (t == 1) {
            leaves(b, queue_);
        } else if (t == 2) {
            int base = bbase_[b];
            assign_label(endpoint_[mate_[base]], 1, mate_[base] ^ 1);
        }
    }

    int scan_blossom(int v, int w)
    {
        std::vector<int> path;
        int base = -1;
        while (v != -1 || w != -1) {
            int b = inblossom_[v];
            if (label_[b] & 4) {
                base = bbase_[b];
                break;
            }
            path.push_back(b);
            label_[b] = 5;
            if (labelend_[b] == -1) {
                v = -1;
            } else {
                v = endpoint_[labelend_[b]];
                b = inblossom_[v];
                v = endpoint_[labelend_[b]];
            }
            if (w != -1)
                std::swap(v, w);
        }
        for (int b : path)
            label_[b] = 1;
        return base;
    }

    void add_blossom(int base, int e)
    {
        int v = ei_[e], w = ej_[e];
        int bb = inblossom_[base];
        int bv = inblossom_[v];
        int bw = inblossom_[w];
        int b = unused_.back();
        unused_.pop_back();
        bbase_[b] = base;
        bparent_[b] = -1;
        bparent_[bb] = b;
        auto& path = bchilds_[b];
        auto& endps = bendps_[b];
        path.clear();
        endps.clear();
        while (bv != bb) {
            bparent_[bv] = b;
            path.push_back(bv);
            endps.push_back(labelend_[bv]);
            v = endpoint_[labelend_[bv]];
            bv = inblossom_[v];
        }
        path.push_back(bb);
        std::reverse(path.begin(), path.end());
        std::reverse(endps.begin(), endps.end());
        endps.push_back(2 * e);
        while (bw != bb) {
            bparent_[bw] = b;
            path.push_back(bw);
            endps.push_back(labelend_[bw] ^ 1);
            w = endpoint_[labelend_[bw]];
            bw = inblossom_[w];
        }
        label_[b] = 1;
        labelend_[b] = labelend_[bb];
        dual_[b] = 0;
        for (int x : leaves(b)) {
            if (label_[inblossom_[x]] == 2)
                queue_.push_back(x);
            inblossom_[x] = b;
        }
        std::vector<int> bestto(2 * nv_, -1);
        for (int sub : path) {
            std::vector<std::vector<int>> lists;
            if (!has_bbest_[sub]) {
                for (int x : leaves(sub)) {
                    std::vector<int> l;
                    for (int p : neighbend_[x])
                        l.push_back(p / 2);
                    lists.push_back(std::move(l));
                }
            } else {
                lists.push_back(bbest_[sub]);
            }
            for (const auto& l : lists)
                for (int k : l) {
                    int i = ei_[k], j = ej_[k];
                    if (inblossom_[j] == b)
                        std::swap(i, j);
                    int bj = inblossom_[j];
                    if (bj != b && label_[bj] == 1 &&
                        (bestto[bj] == -1 || slack(k) < slack(bestto[bj])))
                        bestto[bj] = k;
                }
            bbest_[sub].clear();
            has_bbest_[sub] = false;
            bestedge_[sub] = -1;
        }
        bbest_[b].clear();
        for (int k : bestto)
            if (k != -1)
                bbest_[b].push_back(k);
        has_bbest_[b] = true;
        bestedge_[b] = -1;
        for (int k : bbest_[b])
            if (bestedge_[b] == -1 || slack(k) < slack(bestedge_[b]))
                bestedge_[b] = k;
    }

    void expand_blossom(int b, bool endstage)
    {
        std::vector<int> childs = bchilds_[b];
        for (int s : childs) {
            bparent_[s] = -1;
            if (s < nv_) {
                inblossom_[s] = s;
            } else if (endstage && dual_[s] <= 0) {
                expand_blossom(s, endstage);
            } else {
                for (int x : leaves(s))
                    inblossom_[x] = s;
            }
        }
        if (!endstage && label_[b] == 2) {
            const auto& ch = bchilds_[b];
            const auto& ep = bendps_[b];
            const int len = static_cast<int>(ch.size());
            int entry = inblossom_[endpoint_[labelend_[b] ^ 1]];
            int j = static_cast<int>(std::find(ch.begin(), ch.end(), entry) - ch.begin());
            int jstep, trick;
            if (j & 1) {
                j -= len;
                jstep = 1;
                trick = 0;
            } else {
                jstep = -1;
                trick = 1;
            }
            auto at = [len](const std::vector<int>& v, int idx) { return v[((idx % len) + len) % len]; };
            int p = labelend_[b];
            while (j != 0) {
                label_[endpoint_[p ^ 1]] = 0;
                label_[endpoint_[at(ep, j - trick) ^ trick ^ 1]] = 0;
                assign_label(endpoint_[p ^ 1], 2, p);
                allow_[at(ep, j - trick) / 2] = true;
                j += jstep;
                p = at(ep, j - trick) ^ trick;
                allow_[p / 2] = true;
                j += jstep;
            }
            int bv = at(ch, j);
            label_[endpoint_[p ^ 1]] = label_[bv] = 2;
            labelend_[endpoint_[p ^ 1]] = labelend_[bv] = p;
            bestedge_[bv] = -1;
            j += jstep;
            while (at(ch, j) != entry) {
                bv = at(ch, j);
                if (label_[bv] == 1) {
                    j += jstep;
                    continue;
                }
                int found = -1;
                for (int x : leaves(bv))
                    if (label_[x] != 0) {
                        found = x;
                        break;
                    }
                if (found >= 0) {
                    label_[found] = 0;
                    label_[endpoint_[mate_[bbase_[bv]]]] = 0;
                    assign_label(found, 2, labelend_[found]);
                }
                j += jstep;
            }
        }
        label_[b] = labelend_[b] = -1;
        bchilds_[b].clear();
        bendps_[b].clear();
        bbase_[b] = -1;
        bbest_[b].clear();
        has_bbest_[b] = false;
        bestedge_[b] = -1;
        unused_.push_back(b);
    }

    void augment_blossom(int b, int v)
    {
        int t = v;
        while (bparent_[t] != b)
            t = bparent_[t];
        if (t >= nv_)
            augment_blossom(t, v);
        auto& ch = bchilds_[b];
        auto& ep = bendps_[b];
        const int len = static_cast<int>(ch.size());
        auto idx = [len](int x) { return ((x % len) + len) % len; };
        int i = static_cast<int>(std::find(ch.begin(), ch.end(), t) - ch.begin());
        int j = i;
        int jstep, trick;
        if (i & 1) {
            j -= len;
            jstep = 1;
            trick = 0;
        } else {
            jstep = -1;
            trick = 1;
        }
        while (j != 0) {
            j += jstep;
            t = ch[idx(j)];
            int p = ep[idx(j - trick)] ^ trick;
            if (t >= nv_)
                augment_blossom(t, endpoint_[p]);
            j += jstep;
            t = ch[idx(j)];
            if (t >= nv_)
                augment_blossom(t, endpoint_[p ^ 1]);
            mate_[endpoint_[p]] = p ^ 1;
            mate_[endpoint_[p ^ 1]] = p;
        }
        std::rotate(ch.begin(), ch.begin() + i, ch.end());
        std::rotate(ep.begin(), ep.begin() + i, ep.end());
        bbase_[b] = bbase_[ch[0]];
    }

    void augment_matching(int e)
    {
        int starts[2][2] = {{ei_[e], 2 * e + 1}, {ej_[e], 2 * e}};
        for (auto& sp : starts) {
            int s = sp[0], p = sp[1];
            for (;;) {
                int bs = inblossom_[s];
                if (bs >= nv_)
                    augment_blossom(bs, s);
                mate_[s] = p;
                if (labelend_[bs] == -1)
                    break;
                int t = endpoint_[labelend_[bs]];
                int bt = inblossom_[t];
                s = endpoint_[labelend_[bt]];
                int j = endpoint_[labelend_[bt] ^ 1];
                if (bt >= nv_)
                    augment_blossom(bt, j);
                mate_[j] = labelend_[bt];
                p = labelend_[bt] ^ 1;
            }
        }
    }

    int nv_, ne_ = 0;
    bool maxcard_;
    std::vector<int> ei_, ej_;
    std::vector<double> ew_;
    std::vector<int> endpoint_;
    std::vector<std::vector<int>> neighbend_;
    std::vector<int> mate_, label_, labelend_, inblossom_, bparent_, bbase_, bestedge_, unused_;
    std::vector<std::vector<int>> bchilds_, bendps_, bbest_;
    std::vector<bool> has_bbest_;
    std::vector<double> dual_;
    std::vector<bool> allow_;
    std::vector<int> queue_;
};

}  // namespace

std::vector<int> max_weight_matching_dense(const std::vector<double>& w, int k, bool max_cardinality)
{
    if (k == 0)
        return {};
    BlossomSolver s(w, k, max_cardinality);
    return s.run();
}

}  // namespace ttp
