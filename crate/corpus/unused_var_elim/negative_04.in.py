def value_span(values):
    if len(values) < 2:
        return 0
    return max(values) - min(values)

def normalize(text):
    lowered = text.lower()
    return text.strip()
# probe: normalize(' Hi ')
