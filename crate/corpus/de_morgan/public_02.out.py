def format_pair(key, value):
    label = str(key).strip()
    shown = str(value)
    return label + ' = ' + shown
def keep_odd_or_small(values):
    out = []
    for v in values:
        if not v % 2 == 0 or not v > 10:
            out.append(v)
    return out
