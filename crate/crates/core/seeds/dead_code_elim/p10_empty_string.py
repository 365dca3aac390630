def safe_ratio(num, den):
    if den == 0:
        return None
    ratio = num / den
    return round(ratio, 3)

def tag(text):
    if '':
        text = '[' + text + ']'
    return text.lower()
# probe: tag('Hi')
