def first_word(text):
    parts = text.split(' ')
    if parts:
        return parts[0]
    return ''

def non_blank(lines):
    out = []
    for line in lines:
        if not line.strip() == '':
            out.append(line)
    return out
# probe: non_blank(['a', '  ', 'b'])
