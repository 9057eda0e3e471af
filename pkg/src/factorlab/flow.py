"""Integer max-flow (Dinic) and feasible circulation with lower bounds."""

from __future__ import annotations

from collections import deque


class FlowNetwork:
    """Residual network with paired arcs: arc ``i`` and ``i ^ 1`` are mutual reverses."""

    def __init__(self, num_nodes: int):
        self.num_nodes = num_nodes
        self.head: list[int] = []
        self.cap: list[int] = []
        self.adj: list[list[int]] = [[] for _ in range(num_nodes)]

    def add_arc(self, u: int, v: int, capacity: int) -> int:
        arc = len(self.head)
        self.head.append(v)
        self.cap.append(capacity)
        self.adj[u].append(arc)
        self.head.append(u)
        self.cap.append(0)
        self.adj[v].append(arc + 1)
        return arc

    def max_flow(self, source: int, sink: int, cap: list[int] | None = None, limit: int | None = None) -> int:
        """Push flow from ``source`` to ``sink`` through residual capacities ``cap``.

        ``cap`` is updated in place (defaults to the network's own list). Stops
        early once ``limit`` units have been pushed.
        """
        if cap is None:
            cap = self.cap
        head, adj = self.head, self.adj
        n = self.num_nodes
        if limit is None:
            limit = sum(cap[a] for a in adj[source])
        total = 0
        while total < limit:
            level = [-1] * n
            level[source] = 0
            queue = deque([source])
            while queue:
                u = queue.popleft()
                nxt = level[u] + 1
                for a in adj[u]:
                    if cap[a] and level[head[a]] < 0:
                        level[head[a]] = nxt
                        queue.append(head[a])
            if level[sink] < 0:
                break
            ptr = [0] * n

            def push(u: int, amount: int) -> int:
                if u == sink:
                    return amount
                arcs = adj[u]
                lv = level[u] + 1
                while ptr[u] < len(arcs):
                    a = arcs[ptr[u]]
                    if cap[a] and level[head[a]] == lv:
                        pushed = push(head[a], amount if amount < cap[a] else cap[a])
                        if pushed:
                            cap[a] -= pushed
                            cap[a ^ 1] += pushed
                            return pushed
                    ptr[u] += 1
                return 0

            while total < limit:
                pushed = push(source, limit - total)
                if not pushed:
                    break
                total += pushed
        return total


    def augment(self, source: int, sink: int, cap: list[int], limit: int) -> int:
        """Push up to ``limit`` units along depth-first augmenting paths.

        Cheaper than :meth:`max_flow` when little flow is missing, since there is
        no level graph to rebuild between paths.
        """
        head, adj = self.head, self.adj
        n = self.num_nodes
        total = 0
        while total < limit:
            parent = [-1] * n
            parent[source] = -2
            stack = [source]
            while stack and parent[sink] == -1:
                u = stack.pop()
                for a in adj[u]:
                    v = head[a]
                    if cap[a] and parent[v] == -1:
                        parent[v] = a
                        if v == sink:
                            break
                        stack.append(v)
            if parent[sink] == -1:
                break
            amount = limit - total
            v = sink
            while v != source:
                a = parent[v]
                if cap[a] < amount:
                    amount = cap[a]
                v = head[a ^ 1]
            v = sink
            while v != source:
                a = parent[v]
                cap[a] -= amount
                cap[a ^ 1] += amount
                v = head[a ^ 1]
            total += amount
        return total


def feasible_circulation(num_nodes: int, arcs: list[tuple[int, int, int, int]]) -> list[int] | None:
    """Find an integer circulation with ``lower <= flow <= upper`` on every arc.

    ``arcs`` holds ``(u, v, lower, upper)`` tuples. Returns the flow on each arc,
    or ``None`` when no feasible circulation exists. Lower bounds are removed by
    the usual excess transformation onto a super source and super sink.
    """
    ss, sk = num_nodes, num_nodes + 1
    net = FlowNetwork(num_nodes + 2)
    excess = [0] * num_nodes
    ids = []
    for u, v, lower, upper in arcs:
        if lower > upper:
            return None
        ids.append(net.add_arc(u, v, upper - lower))
        excess[v] += lower
        excess[u] -= lower
    need = 0
    for v, e in enumerate(excess):
        if e > 0:
            net.add_arc(ss, v, e)
            need += e
        elif e < 0:
            net.add_arc(v, sk, -e)
    if net.max_flow(ss, sk, limit=need) < need:
        return None
    return [lower + net.cap[a ^ 1] for a, (_, _, lower, _) in zip(ids, arcs)]
