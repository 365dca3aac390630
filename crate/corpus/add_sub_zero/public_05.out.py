def value_span(values):
    if len(values) < 2:
        return 0
    return max(values) - min(values)
def max_gap(nums):
    ordered = sorted(nums)
    best = 0
    for i in range(1, len(ordered)):
        gap = ordered[i] - ordered[i - 1]
        if gap > best:
            best = gap
    return best
