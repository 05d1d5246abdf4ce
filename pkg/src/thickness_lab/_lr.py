"""Left-right planarity test (de Fraysseix-Rosenstiehl, in Brandes' formulation).

Pure-Python reference path.  ``lr_planarity`` returns a counterclockwise
rotation system for planar input and ``None`` otherwise; the compiled kernel
in ``_lr_kernel`` only reproduces the verdict.  All three DFS phases are
iterative so deep DFS trees (long products) do not hit the recursion limit.
"""

from __future__ import annotations

from typing import Optional, Sequence

OEdge = tuple[int, int]


class _Interval:
    __slots__ = ("low", "high")

    def __init__(self, low: Optional[OEdge] = None, high: Optional[OEdge] = None) -> None:
        self.low = low
        self.high = high

    def empty(self) -> bool:
        return self.low is None and self.high is None


class _ConflictPair:
    __slots__ = ("left", "right")

    def __init__(self, left: Optional[_Interval] = None, right: Optional[_Interval] = None) -> None:
        self.left = left if left is not None else _Interval()
        self.right = right if right is not None else _Interval()

    def swap(self) -> None:
        self.left, self.right = self.right, self.left


class _LRState:
    def __init__(self, n: int, adjacency: Sequence[Sequence[int]]) -> None:
        self.n = n
        self.adj = adjacency
        self.height = [-1] * n
        self.parent_edge: list[Optional[OEdge]] = [None] * n
        self.roots: list[int] = []
        self.out: list[list[int]] = [[] for _ in range(n)]
        self.lowpt: dict[OEdge, int] = {}
        self.lowpt2: dict[OEdge, int] = {}
        self.nesting_depth: dict[OEdge, int] = {}
        self.ordered_adj: list[list[int]] = []

        self.S: list[_ConflictPair] = []
        self.stack_bottom: dict[OEdge, Optional[_ConflictPair]] = {}
        self.lowpt_edge: dict[OEdge, OEdge] = {}
        self.ref: dict[OEdge, Optional[OEdge]] = {}
        self.side: dict[OEdge, int] = {}

    # -- phase 1: orientation ------------------------------------------------

    def orient(self) -> None:
        height, parent_edge = self.height, self.parent_edge
        lowpt, lowpt2, nd = self.lowpt, self.lowpt2, self.nesting_depth
        oriented: set[tuple[int, int]] = set()
        ind = [0] * self.n

        def finish(vw: OEdge) -> None:
            v = vw[0]
            nd[vw] = 2 * lowpt[vw] + (1 if lowpt2[vw] < height[v] else 0)
            e = parent_edge[v]
            if e is None:
                return
            if lowpt[vw] < lowpt[e]:
                lowpt2[e] = min(lowpt[e], lowpt2[vw])
                lowpt[e] = lowpt[vw]
            elif lowpt[vw] > lowpt[e]:
                lowpt2[e] = min(lowpt2[e], lowpt[vw])
            else:
                lowpt2[e] = min(lowpt2[e], lowpt2[vw])

        for s in range(self.n):
            if height[s] != -1:
                continue
            height[s] = 0
            self.roots.append(s)
            stack = [s]
            while stack:
                v = stack[-1]
                nbrs = self.adj[v]
                descended = False
                while ind[v] < len(nbrs):
                    w = nbrs[ind[v]]
                    ind[v] += 1
                    key = (v, w) if v < w else (w, v)
                    if key in oriented:
                        continue
                    oriented.add(key)
                    vw = (v, w)
                    self.out[v].append(w)
                    lowpt[vw] = height[v]
                    lowpt2[vw] = height[v]
                    if height[w] == -1:
                        parent_edge[w] = vw
                        height[w] = height[v] + 1
                        stack.append(w)
                        descended = True
                        break
                    lowpt[vw] = height[w]
                    finish(vw)
                if descended:
                    continue
                stack.pop()
                e = parent_edge[v]
                if e is not None:
                    finish(e)

    # -- phase 2: testing ----------------------------------------------------

    def _conflicting(self, iv: _Interval, b: OEdge) -> bool:
        return not iv.empty() and self.lowpt[iv.high] > self.lowpt[b]  # type: ignore[index]

    def _lowest(self, p: _ConflictPair) -> int:
        if p.left.empty():
            return self.lowpt[p.right.low]  # type: ignore[index]
        if p.right.empty():
            return self.lowpt[p.left.low]  # type: ignore[index]
        return min(self.lowpt[p.left.low], self.lowpt[p.right.low])  # type: ignore[index]

    def _add_constraints(self, ei: OEdge, e: OEdge) -> bool:
        S, lowpt, ref = self.S, self.lowpt, self.ref
        P = _ConflictPair()
        bottom = self.stack_bottom[ei]
        # return edges of ei go to P.right
        while True:
            Q = S.pop()
            if not Q.left.empty():
                Q.swap()
            if not Q.left.empty():
                return False
            if lowpt[Q.right.low] > lowpt[e]:  # type: ignore[index]
                if P.right.empty():
                    P.right.high = Q.right.high
                else:
                    ref[P.right.low] = Q.right.high  # type: ignore[index]
                P.right.low = Q.right.low
            else:
                ref[Q.right.low] = self.lowpt_edge[e]  # type: ignore[index]
            if (S[-1] if S else None) is bottom:
                break
        # conflicting return edges of earlier siblings go to P.left
        while S and (self._conflicting(S[-1].left, ei) or self._conflicting(S[-1].right, ei)):
            Q = S.pop()
            if self._conflicting(Q.right, ei):
                Q.swap()
            if self._conflicting(Q.right, ei):
                return False
            ref[P.right.low] = Q.right.high  # type: ignore[index]
            if Q.right.low is not None:
                P.right.low = Q.right.low
            if P.left.empty():
                P.left.high = Q.left.high
            else:
                ref[P.left.low] = Q.left.high  # type: ignore[index]
            P.left.low = Q.left.low
        if not (P.left.empty() and P.right.empty()):
            S.append(P)
        return True

    def _remove_back_edges(self, e: OEdge) -> None:
        S, ref, side, lowpt = self.S, self.ref, self.side, self.lowpt
        u = e[0]
        hu = self.height[u]
        while S and self._lowest(S[-1]) == hu:
            P = S.pop()
            if P.left.low is not None:
                side[P.left.low] = -1
        if S:
            P = S.pop()
            while P.left.high is not None and P.left.high[1] == u:
                P.left.high = ref[P.left.high]
            if P.left.high is None and P.left.low is not None:
                ref[P.left.low] = P.right.low
                side[P.left.low] = -1
                P.left.low = None
            while P.right.high is not None and P.right.high[1] == u:
                P.right.high = ref[P.right.high]
            if P.right.high is None and P.right.low is not None:
                ref[P.right.low] = P.left.low
                side[P.right.low] = -1
                P.right.low = None
            S.append(P)
        if lowpt[e] < hu and S:
            hl, hr = S[-1].left.high, S[-1].right.high
            if hl is not None and (hr is None or lowpt[hl] > lowpt[hr]):
                ref[e] = hl
            else:
                ref[e] = hr

    def test(self) -> bool:
        nd = self.nesting_depth
        self.ordered_adj = [sorted(self.out[v], key=lambda w, v=v: nd[(v, w)]) for v in range(self.n)]
        for v in range(self.n):
            for w in self.out[v]:
                self.side[(v, w)] = 1
                self.ref[(v, w)] = None
        height, parent_edge, lowpt = self.height, self.parent_edge, self.lowpt
        S = self.S
        ind = [0] * self.n
        pending: list[Optional[OEdge]] = [None] * self.n

        def after_edge(v: int, ei: OEdge) -> bool:
            if lowpt[ei] < height[v]:
                e = parent_edge[v]
                if ei[1] == self.ordered_adj[v][0]:
                    self.lowpt_edge[e] = self.lowpt_edge[ei]  # type: ignore[index]
                else:
                    return self._add_constraints(ei, e)  # type: ignore[arg-type]
            return True

        for s in self.roots:
            stack = [s]
            while stack:
                v = stack[-1]
                ei = pending[v]
                if ei is not None:
                    pending[v] = None
                    if not after_edge(v, ei):
                        return False
                oadj = self.ordered_adj[v]
                descended = False
                while ind[v] < len(oadj):
                    w = oadj[ind[v]]
                    ind[v] += 1
                    ei = (v, w)
                    self.stack_bottom[ei] = S[-1] if S else None
                    if parent_edge[w] == ei:
                        pending[v] = ei
                        stack.append(w)
                        descended = True
                        break
                    self.lowpt_edge[ei] = ei
                    S.append(_ConflictPair(right=_Interval(ei, ei)))
                    if not after_edge(v, ei):
                        return False
                if descended:
                    continue
                stack.pop()
                e = parent_edge[v]
                if e is not None:
                    self._remove_back_edges(e)
        return True

    # -- phase 3: embedding --------------------------------------------------

    def _sign(self, e: OEdge) -> int:
        ref, side = self.ref, self.side
        chain = [e]
        while ref[chain[-1]] is not None:
            chain.append(ref[chain[-1]])  # type: ignore[arg-type]
        for k in range(len(chain) - 2, -1, -1):
            side[chain[k]] *= side[chain[k + 1]]
            ref[chain[k]] = None
        return side[e]

    def embed(self) -> list[list[int]]:
        n = self.n
        nd = self.nesting_depth
        for v in range(n):
            for w in self.out[v]:
                nd[(v, w)] = self._sign((v, w)) * nd[(v, w)]
        ordered = [sorted(self.out[v], key=lambda w, v=v: nd[(v, w)]) for v in range(n)]

        cw: list[dict[int, int]] = [{} for _ in range(n)]
        ccw: list[dict[int, int]] = [{} for _ in range(n)]
        first: list[Optional[int]] = [None] * n

        def add_cw(v: int, w: int, r: Optional[int]) -> None:
            if r is None:
                cw[v][w] = w
                ccw[v][w] = w
                first[v] = w
                return
            nxt = cw[v][r]
            cw[v][r] = w
            ccw[v][w] = r
            cw[v][w] = nxt
            ccw[v][nxt] = w

        def add_ccw(v: int, w: int, r: int) -> None:
            add_cw(v, w, ccw[v][r])
            if r == first[v]:
                first[v] = w

        for v in range(n):
            prev = None
            for w in ordered[v]:
                add_cw(v, w, prev)
                prev = w

        left_ref = [-1] * n
        right_ref = [-1] * n
        ind = [0] * n
        for s in self.roots:
            stack = [s]
            while stack:
                v = stack[-1]
                oadj = ordered[v]
                descended = False
                while ind[v] < len(oadj):
                    w = oadj[ind[v]]
                    ind[v] += 1
                    ei = (v, w)
                    if self.parent_edge[w] == ei:
                        if first[w] is None:
                            add_cw(w, v, None)
                        else:
                            add_ccw(w, v, first[w])  # type: ignore[arg-type]
                        left_ref[v] = w
                        right_ref[v] = w
                        stack.append(w)
                        descended = True
                        break
                    if self.side[ei] == 1:
                        add_cw(w, v, right_ref[w])
                    else:
                        add_ccw(w, v, left_ref[w])
                        left_ref[w] = v
                if not descended:
                    stack.pop()

        rotation = []
        for v in range(n):
            f = first[v]
            if f is None:
                rotation.append([])
                continue
            order = [f]
            x = cw[v][f]
            while x != f:
                order.append(x)
                x = cw[v][x]
            order.reverse()  # counterclockwise
            rotation.append(order)
        return rotation


def lr_is_planar(n: int, adjacency: Sequence[Sequence[int]]) -> bool:
    m = sum(len(a) for a in adjacency) // 2
    if n >= 3 and m > 3 * n - 6:
        return False
    st = _LRState(n, adjacency)
    st.orient()
    return st.test()


def lr_planarity(n: int, adjacency: Sequence[Sequence[int]]) -> Optional[list[list[int]]]:
    """Counterclockwise rotation per vertex, or ``None`` if nonplanar."""
    m = sum(len(a) for a in adjacency) // 2
    if n >= 3 and m > 3 * n - 6:
        return None
    st = _LRState(n, adjacency)
    st.orient()
    if not st.test():
        return None
    return st.embed()


def adjacency_from_edges(n: int, edges: Sequence[tuple[int, int]]) -> list[list[int]]:
    adj: list[list[int]] = [[] for _ in range(n)]
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)
    return adj
