def value_span(values):
    if len(values) < 2:
        return 0
    return max(values) - min(values)
def histogram(words):
    counts = {}
    for w in words:
        counts[w] = counts.get(w, 0) + 1
    return counts
