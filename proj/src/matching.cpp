#include <arrowing/matching.hpp>

#include <algorithm>
#include <optional>
#include <stdexcept>

namespace arrowing::detail {

namespace {

// Primal-dual blossom algorithm in the formulation of Galil (1986).  Vertex
// duals are stored doubled so every quantity stays integral.  Endpoints are
// numbered 2k and 2k+1 for edge k.
class BlossomMatcher {
  public:
    BlossomMatcher(std::size_t n, std::span<const WeightedEdge> edges) :
        n_(static_cast<long>(n)), edges_(edges.begin(), edges.end())
    {
        long m = static_cast<long>(edges_.size());
        std::int64_t max_weight = 0;
        for (const auto& e : edges_)
            max_weight = std::max(max_weight, e.weight);
        endpoint_.resize(2 * m);
        for (long k = 0; k < m; ++k) {
            endpoint_[2 * k] = edges_[k].u;
            endpoint_[2 * k + 1] = edges_[k].v;
        }
        neighbend_.assign(n_, {});
        for (long k = 0; k < m; ++k) {
            neighbend_[edges_[k].u].push_back(2 * k + 1);
            neighbend_[edges_[k].v].push_back(2 * k);
        }
        mate_.assign(n_, -1);
        label_.assign(2 * n_, 0);
        labelend_.assign(2 * n_, -1);
        inblossom_.resize(n_);
        for (long v = 0; v < n_; ++v)
            inblossom_[v] = v;
        blossomparent_.assign(2 * n_, -1);
        blossomchilds_.assign(2 * n_, {});
        blossombase_.assign(2 * n_, -1);
        for (long v = 0; v < n_; ++v)
            blossombase_[v] = v;
        blossomendps_.assign(2 * n_, {});
        bestedge_.assign(2 * n_, -1);
        blossombestedges_.assign(2 * n_, std::nullopt);
        for (long b = 2 * n_ - 1; b >= n_; --b)
            unusedblossoms_.push_back(b);
        dualvar_.assign(2 * n_, 0);
        for (long v = 0; v < n_; ++v)
            dualvar_[v] = max_weight;
        allowedge_.assign(m, 0);
    }

    std::vector<std::int64_t> run()
    {
        if (edges_.empty())
            return std::vector<std::int64_t>(n_, -1);
        for (long stage = 0; stage < n_; ++stage) {
            std::fill(label_.begin(), label_.end(), 0);
            std::fill(bestedge_.begin(), bestedge_.end(), -1);
            for (long b = n_; b < 2 * n_; ++b)
                blossombestedges_[b].reset();
            std::fill(allowedge_.begin(), allowedge_.end(), 0);
            queue_.clear();
            for (long v = 0; v < n_; ++v)
                if (mate_[v] == -1 && label_[inblossom_[v]] == 0)
                    assign_label(v, 1, -1);
            bool augmented = false;
            while (true) {
                while (!queue_.empty() && !augmented) {
                    long v = queue_.back();
                    queue_.pop_back();
                    for (long p : neighbend_[v]) {
                        long k = p / 2;
                        long w = endpoint_[p];
                        if (inblossom_[v] == inblossom_[w])
                            continue;
                        std::int64_t kslack = 0;
                        if (!allowedge_[k]) {
                            kslack = slack(k);
                            if (kslack <= 0)
                                allowedge_[k] = 1;
                        }
                        if (allowedge_[k]) {
                            if (label_[inblossom_[w]] == 0) {
                                assign_label(w, 2, p ^ 1);
                            } else if (label_[inblossom_[w]] == 1) {
                                long base = scan_blossom(v, w);
                                if (base >= 0) {
                                    add_blossom(base, k);
                                } else {
                                    augment_matching(k);
                                    augmented = true;
                                    break;
                                }
                            } else if (label_[w] == 0) {
                                label_[w] = 2;
                                labelend_[w] = p ^ 1;
                            }
                        } else if (label_[inblossom_[w]] == 1) {
                            long b = inblossom_[v];
                            if (bestedge_[b] == -1 || kslack < slack(bestedge_[b]))
                                bestedge_[b] = k;
                        } else if (label_[w] == 0) {
                            if (bestedge_[w] == -1 || kslack < slack(bestedge_[w]))
                                bestedge_[w] = k;
                        }
                    }
                }
                if (augmented)
                    break;

                int deltatype = 1;
                std::int64_t delta = *std::min_element(dualvar_.begin(), dualvar_.begin() + n_);
                long deltaedge = -1;
                long deltablossom = -1;
                for (long v = 0; v < n_; ++v)
                    if (label_[inblossom_[v]] == 0 && bestedge_[v] != -1) {
                        auto d = slack(bestedge_[v]);
                        if (d < delta) {
                            delta = d;
                            deltatype = 2;
                            deltaedge = bestedge_[v];
                        }
                    }
                for (long b = 0; b < 2 * n_; ++b)
                    if (blossomparent_[b] == -1 && label_[b] == 1 && bestedge_[b] != -1) {
                        auto kslack = slack(bestedge_[b]);
                        auto d = kslack / 2;
                        if (d < delta) {
                            delta = d;
                            deltatype = 3;
                            deltaedge = bestedge_[b];
                        }
                    }
                for (long b = n_; b < 2 * n_; ++b)
                    if (blossombase_[b] >= 0 && blossomparent_[b] == -1 && label_[b] == 2 && dualvar_[b] < delta) {
                        delta = dualvar_[b];
                        deltatype = 4;
                        deltablossom = b;
                    }

                for (long v = 0; v < n_; ++v) {
                    if (label_[inblossom_[v]] == 1)
                        dualvar_[v] -= delta;
                    else if (label_[inblossom_[v]] == 2)
                        dualvar_[v] += delta;
                }
                for (long b = n_; b < 2 * n_; ++b)
                    if (blossombase_[b] >= 0 && blossomparent_[b] == -1) {
                        if (label_[b] == 1)
                            dualvar_[b] += delta;
                        else if (label_[b] == 2)
                            dualvar_[b] -= delta;
                    }

                if (deltatype == 1) {
                    break;
                } else if (deltatype == 2) {
                    allowedge_[deltaedge] = 1;
                    long i = edges_[deltaedge].u, j = edges_[deltaedge].v;
                    if (label_[inblossom_[i]] == 0)
                        std::swap(i, j);
                    queue_.push_back(i);
                } else if (deltatype == 3) {
                    allowedge_[deltaedge] = 1;
                    queue_.push_back(edges_[deltaedge].u);
                } else {
                    expand_blossom(deltablossom, false);
                }
            }
            if (!augmented)
                break;
            for (long b = n_; b < 2 * n_; ++b)
                if (blossomparent_[b] == -1 && blossombase_[b] >= 0 && label_[b] == 1 && dualvar_[b] == 0)
                    expand_blossom(b, true);
        }
        std::vector<std::int64_t> result(n_, -1);
        for (long v = 0; v < n_; ++v)
            if (mate_[v] >= 0)
                result[v] = endpoint_[mate_[v]];
        return result;
    }

  private:
    std::int64_t slack(long k) const
    {
        const auto& e = edges_[k];
        return dualvar_[e.u] + dualvar_[e.v] - 2 * e.weight;
    }

    void leaves(long b, std::vector<long>& out) const
    {
        if (b < n_) {
            out.push_back(b);
            return;
        }
        for (long t : blossomchilds_[b])
            leaves(t, out);
    }

    std::vector<long> leaves(long b) const
    {
        std::vector<long> out;
        leaves(b, out);
        return out;
    }

    void assign_label(long w, int t, long p)
    {
        long b = inblossom_[w];
        label_[w] = label_[b] = t;
        labelend_[w] = labelend_[b] = p;
        bestedge_[w] = bestedge_[b] = -1;
        if (t == 1) {
            leaves(b, queue_);
        } else if (t == 2) {
            long base = blossombase_[b];
            assign_label(endpoint_[mate_[base]], 1, mate_[base] ^ 1);
        }
    }

    long scan_blossom(long v, long w)
    {
        std::vector<long> path;
        long base = -1;
        while (v != -1 || w != -1) {
            long b = inblossom_[v];
            if (label_[b] & 4) {
                base = blossombase_[b];
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
        for (long b : path)
            label_[b] = 1;
        return base;
    }

    void add_blossom(long base, long k)
    {
        long v = edges_[k].u, w = edges_[k].v;
        long bb = inblossom_[base];
        long bv = inblossom_[v];
        long bw = inblossom_[w];
        long b = unusedblossoms_.back();
        unusedblossoms_.pop_back();
        blossombase_[b] = base;
        blossomparent_[b] = -1;
        blossomparent_[bb] = b;
        std::vector<long> path;
        std::vector<long> endps;
        while (bv != bb) {
            blossomparent_[bv] = b;
            path.push_back(bv);
            endps.push_back(labelend_[bv]);
            v = endpoint_[labelend_[bv]];
            bv = inblossom_[v];
        }
        path.push_back(bb);
        std::reverse(path.begin(), path.end());
        std::reverse(endps.begin(), endps.end());
        endps.push_back(2 * k);
        while (bw != bb) {
            blossomparent_[bw] = b;
            path.push_back(bw);
            endps.push_back(labelend_[bw] ^ 1);
            w = endpoint_[labelend_[bw]];
            bw = inblossom_[w];
        }
        blossomchilds_[b] = path;
        blossomendps_[b] = endps;
        label_[b] = 1;
        labelend_[b] = labelend_[bb];
        dualvar_[b] = 0;
        for (long leaf : leaves(b)) {
            if (label_[inblossom_[leaf]] == 2)
                queue_.push_back(leaf);
            inblossom_[leaf] = b;
        }
        std::vector<long> bestedgeto(2 * n_, -1);
        for (long child : path) {
            std::vector<std::vector<long>> nblists;
            if (!blossombestedges_[child]) {
                for (long leaf : leaves(child)) {
                    std::vector<long> list;
                    for (long p : neighbend_[leaf])
                        list.push_back(p / 2);
                    nblists.push_back(std::move(list));
                }
            } else {
                nblists.push_back(*blossombestedges_[child]);
            }
            for (const auto& list : nblists)
                for (long e : list) {
                    long i = edges_[e].u, j = edges_[e].v;
                    if (inblossom_[j] == b)
                        std::swap(i, j);
                    long bj = inblossom_[j];
                    if (bj != b && label_[bj] == 1 && (bestedgeto[bj] == -1 || slack(e) < slack(bestedgeto[bj])))
                        bestedgeto[bj] = e;
                }
            blossombestedges_[child].reset();
            bestedge_[child] = -1;
        }
        std::vector<long> best;
        for (long e : bestedgeto)
            if (e != -1)
                best.push_back(e);
        blossombestedges_[b] = best;
        bestedge_[b] = -1;
        for (long e : best)
            if (bestedge_[b] == -1 || slack(e) < slack(bestedge_[b]))
                bestedge_[b] = e;
    }

    void expand_blossom(long b, bool endstage)
    {
        auto children = blossomchilds_[b];
        for (long s : children) {
            blossomparent_[s] = -1;
            if (s < n_) {
                inblossom_[s] = s;
            } else if (endstage && dualvar_[s] == 0) {
                expand_blossom(s, endstage);
            } else {
                for (long leaf : leaves(s))
                    inblossom_[leaf] = s;
            }
        }
        if (!endstage && label_[b] == 2) {
            const auto& childs = blossomchilds_[b];
            const auto& endps = blossomendps_[b];
            long size = static_cast<long>(childs.size());
            auto at = [size](const std::vector<long>& list, long index) {
                return list[static_cast<std::size_t>(((index % size) + size) % size)];
            };
            long entrychild = inblossom_[endpoint_[labelend_[b] ^ 1]];
            long j = static_cast<long>(std::find(childs.begin(), childs.end(), entrychild) - childs.begin());
            long jstep, endptrick;
            if (j & 1) {
                j -= size;
                jstep = 1;
                endptrick = 0;
            } else {
                jstep = -1;
                endptrick = 1;
            }
            long p = labelend_[b];
            while (j != 0) {
                label_[endpoint_[p ^ 1]] = 0;
                label_[endpoint_[at(endps, j - endptrick) ^ endptrick ^ 1]] = 0;
                assign_label(endpoint_[p ^ 1], 2, p);
                allowedge_[at(endps, j - endptrick) / 2] = 1;
                j += jstep;
                p = at(endps, j - endptrick) ^ endptrick;
                allowedge_[p / 2] = 1;
                j += jstep;
            }
            long bv = at(childs, j);
            label_[endpoint_[p ^ 1]] = label_[bv] = 2;
            labelend_[endpoint_[p ^ 1]] = labelend_[bv] = p;
            bestedge_[bv] = -1;
            j += jstep;
            while (at(childs, j) != entrychild) {
                bv = at(childs, j);
                if (label_[bv] == 1) {
                    j += jstep;
                    continue;
                }
                long found = -1;
                for (long leaf : leaves(bv))
                    if (label_[leaf] != 0) {
                        found = leaf;
                        break;
                    }
                if (found != -1) {
                    label_[found] = 0;
                    label_[endpoint_[mate_[blossombase_[bv]]]] = 0;
                    assign_label(found, 2, labelend_[found]);
                }
                j += jstep;
            }
        }
        label_[b] = labelend_[b] = -1;
        blossomchilds_[b].clear();
        blossomendps_[b].clear();
        blossombase_[b] = -1;
        blossombestedges_[b].reset();
        bestedge_[b] = -1;
        unusedblossoms_.push_back(b);
    }

    void augment_blossom(long b, long v)
    {
        long t = v;
        while (blossomparent_[t] != b)
            t = blossomparent_[t];
        if (t >= n_)
            augment_blossom(t, v);
        auto& childs = blossomchilds_[b];
        auto& endps = blossomendps_[b];
        long size = static_cast<long>(childs.size());
        auto at = [size](const std::vector<long>& list, long index) {
            return list[static_cast<std::size_t>(((index % size) + size) % size)];
        };
        long i = static_cast<long>(std::find(childs.begin(), childs.end(), t) - childs.begin());
        long j = i;
        long jstep, endptrick;
        if (i & 1) {
            j -= size;
            jstep = 1;
            endptrick = 0;
        } else {
            jstep = -1;
            endptrick = 1;
        }
        while (j != 0) {
            j += jstep;
            t = at(childs, j);
            long p = at(endps, j - endptrick) ^ endptrick;
            if (t >= n_)
                augment_blossom(t, endpoint_[p]);
            j += jstep;
            t = at(childs, j);
            if (t >= n_)
                augment_blossom(t, endpoint_[p ^ 1]);
            mate_[endpoint_[p]] = p ^ 1;
            mate_[endpoint_[p ^ 1]] = p;
        }
        std::rotate(childs.begin(), childs.begin() + i, childs.end());
        std::rotate(endps.begin(), endps.begin() + i, endps.end());
        blossombase_[b] = blossombase_[childs[0]];
    }

    void augment_matching(long k)
    {
        long v = edges_[k].u, w = edges_[k].v;
        for (auto [s, p] : {std::pair<long, long>{v, 2 * k + 1}, std::pair<long, long>{w, 2 * k}}) {
            while (true) {
                long bs = inblossom_[s];
                if (bs >= n_)
                    augment_blossom(bs, s);
                mate_[s] = p;
                if (labelend_[bs] == -1)
                    break;
                long t = endpoint_[labelend_[bs]];
                long bt = inblossom_[t];
                s = endpoint_[labelend_[bt]];
                long j = endpoint_[labelend_[bt] ^ 1];
                if (bt >= n_)
                    augment_blossom(bt, j);
                mate_[j] = labelend_[bt];
                p = labelend_[bt] ^ 1;
            }
        }
    }

    long n_;
    std::vector<WeightedEdge> edges_;
    std::vector<long> endpoint_;
    std::vector<std::vector<long>> neighbend_;
    std::vector<long> mate_;
    std::vector<int> label_;
    std::vector<long> labelend_;
    std::vector<long> inblossom_;
    std::vector<long> blossomparent_;
    std::vector<std::vector<long>> blossomchilds_;
    std::vector<long> blossombase_;
    std::vector<std::vector<long>> blossomendps_;
    std::vector<long> bestedge_;
    std::vector<std::optional<std::vector<long>>> blossombestedges_;
    std::vector<long> unusedblossoms_;
    std::vector<std::int64_t> dualvar_;
    std::vector<char> allowedge_;
    std::vector<long> queue_;
};

} // namespace

std::vector<std::int64_t> maximum_weight_matching(std::size_t vertex_count, std::span<const WeightedEdge> edges)
{
    for (const auto& e : edges)
        if (e.u >= vertex_count || e.v >= vertex_count || e.u == e.v || e.weight < 0)
            throw std::invalid_argument("matching edge out of range or negative weight");
    return BlossomMatcher(vertex_count, edges).run();
}

} // namespace arrowing::detail
