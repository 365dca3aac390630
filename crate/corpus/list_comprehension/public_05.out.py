def value_span(values):
    if len(values) < 2:
        return 0
    return max(values) - min(values)
def numbered(items):
    lines = [str(k + 1) + '. ' + item for k, item in enumerate(items)]
    return lines
