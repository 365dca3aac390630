def value_span(values):
    if len(values) < 2:
        return 0
    return max(values) - min(values)

def numbered(items):
    lines = []
    for k, item in enumerate(items):
        lines.append(str(k + 1) + '. ' + item)
    return lines
# probe: numbered(['x', 'y'])
