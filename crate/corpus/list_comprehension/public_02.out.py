def value_span(values):
    if len(values) < 2:
        return 0
    return max(values) - min(values)
def lengths(words):
    sizes = [len(w) for w in words]
    total = sum(sizes)
    return sizes, total
