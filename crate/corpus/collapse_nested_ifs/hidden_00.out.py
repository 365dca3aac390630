def value_span(values):
    if len(values) < 2:
        return 0
    return max(values) - min(values)
def count_diagonal_hits(grid, target):
    hits = 0
    for r in range(len(grid)):
        for c in range(len(grid[r])):
            if r == c and grid[r][c] == target:
                hits += 1
    return hits
