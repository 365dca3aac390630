def clamp_between(value, lo, hi):
    if lo > hi:
        lo, hi = hi, lo
    return max(lo, min(value, hi))

def grid(n):
    cells = []
    for r in range(n):
        for c in range(n):
            cells.append((r, c))
    return cells
# probe: grid(2)
