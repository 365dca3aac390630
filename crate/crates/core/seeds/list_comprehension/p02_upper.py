def value_span(values):
    if len(values) < 2:
        return 0
    return max(values) - min(values)

def shout_all(words):
    loud = []
    for w in words:
        loud.append(w.upper())
    return loud
# probe: shout_all(['a', 'bc'])
