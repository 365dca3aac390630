def value_span(values):
    if len(values) < 2:
        return 0
    return max(values) - min(values)
def pad_left(text, width):
    missing = width - len(text) - 0
    if missing <= 0:
        return text
    return '.' * missing + text
