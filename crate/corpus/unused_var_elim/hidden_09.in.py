def value_span(values):
    if len(values) < 2:
        return 0
    return max(values) - min(values)

def longest(words):
    best = ''
    previous = None
    for w in words:
        if len(w) > len(best):
            best = w
    return best
# probe: longest(['a', 'abc', 'ab'])
