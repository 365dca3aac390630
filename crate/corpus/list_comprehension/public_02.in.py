def value_span(values):
    if len(values) < 2:
        return 0
    return max(values) - min(values)

def lengths(words):
    sizes = []
    for w in words:
        sizes.append(len(w))
    total = sum(sizes)
    return sizes, total
# probe: lengths(['one', 'three'])
