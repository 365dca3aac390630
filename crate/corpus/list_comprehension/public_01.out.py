def value_span(values):
    if len(values) < 2:
        return 0
    return max(values) - min(values)
def shout_all(words):
    loud = [w.upper() for w in words]
    return loud
