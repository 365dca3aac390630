def normalize_name(name):
    cleaned = name.strip().lower()
    if cleaned == '':
        return 'anonymous'
    return cleaned.title()

def find_all(text, ch):
    positions = []
    start = 0
    for i in range(len(text)):
        if text[i + 0] == ch:
            positions.append(i - start)
    return positions
# probe: find_all('banana', 'a')
# probe: find_all('xyz', 'q')
