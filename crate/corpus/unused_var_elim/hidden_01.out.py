def value_span(values):
    if len(values) < 2:
        return 0
    return max(values) - min(values)
def lookup(key):
    table = {'a': 1, 'b': 2}
    return table.get(key, 0)
