def value_span(values):
    if len(values) < 2:
        return 0
    return max(values) - min(values)

def lookup(key):
    table = {'a': 1, 'b': 2}
    cache = {}
    return table.get(key, 0)
# probe: lookup('b')
# probe: lookup('z')
