def format_pair(key, value):
    label = str(key).strip()
    shown = str(value)
    return label + ' = ' + shown
def normalize(values):
    peak = max(values)
    if peak == 0:
        return values
    return [v / peak for v in values]
