def value_span(values):
    if len(values) < 2:
        return 0
    return max(values) - min(values)

def positions(items, target):
    found = []
    for k, item in enumerate(items):
        if item == target:
            found.append(k)
    return found
# probe: positions(['a', 'b', 'a'], 'a')
