"""
Text and PDF renderings.

Certificate reports are rendered from the serialized document, so the text
and JSON outputs always carry the same data.
"""
import logging

from .patterns import j_prefix, k_prefix
from .recgen import generation_runs, list_contributions

logger = logging.getLogger(__name__)

SET_PREVIEW = 30


def _bits(state):
    return ' '.join(f"{key}={state[key]}" for key in ('X', 'Y', 'Z', 'U', 'V', 'W') if key in state)


# ============================================================================
# RECURRENCE LISTINGS
# ============================================================================

def run_header(p, run):
    """Pattern header of one generation run, P/Q and J/K seen from that run."""
    p_set, q_set = (p.Q, p.P) if run.swapped else (p.P, p.Q)
    j_set, k_set = j_prefix(p, 2 * SET_PREVIEW), k_prefix(p, 2 * SET_PREVIEW)
    if run.swapped:
        j_set, k_set = k_set, j_set
    return [
        f"v= {list(p.coeffs)}     direction = {run.name} -> {run.bar_label}",
        f"P= {sorted(p_set)}",
        f"Q= {sorted(q_set)}",
        f"J= {j_set[:SET_PREVIEW]}",
        f"K= {k_set[:SET_PREVIEW]}",
    ]


def render_run(system, run, verbose=False):
    p = system.pattern
    if not verbose:
        return [f"direction = {run.name} -> {run.bar_label}"] + system.lines(run.name)

    lines = run_header(p, run)
    lines.append('')
    current = None
    for kind, h, k, items in list_contributions(p, run):
        family = run.target_name(kind)
        if current is not None and current != (family, h):
            lines.append(system.line(*current))
            lines.append('')
        current = (family, h)
        if kind == 'PX':
            lines.append(f" k : {p.d}N+{k}")
        for item in items:
            lines.append(f" {item.index} {item.word.text}: {' '.join(item.labels)}")
    if current is not None:
        lines.append(system.line(*current))
    return lines


def render_system_text(system, verbose=False):
    lines = []
    listed = system.stats.get('listed_types', {})
    for run in generation_runs(system.pattern):
        if lines:
            lines.append('')
        lines.extend(render_run(system, run, verbose))
        lines.append(f"listed types = {listed.get(run.name, 0)}")
    return '\n'.join(lines)


def render_system_document_text(document):
    lines = [f"v= {document['pattern']}     d = {document['d']}     last sign = {document['last_sign']}"]
    for run in document['runs']:
        lines.append('')
        lines.append(f"direction = {run['direction']}     listed types = {run['listed_types']}")
        lines.extend(run['lines'])
    return '\n'.join(lines)


# ============================================================================
# CERTIFICATES
# ============================================================================

def render_certificate_text(document):
    lines = [
        f"v= {document['pattern']}     d = {document['d']}     last sign = {document['last_sign']}",
        f"P= {document['P']}",
        f"Q= {document['Q']}",
    ]
    for run in document['recurrences']:
        lines.append('')
        lines.append(f"direction = {run['direction']}     listed types = {run['listed_types']}")
        lines.extend(run['lines'])

    validation = document['validation']
    lines.append('')
    lines.append(f"n_valid = {document['n_valid']}     checked n <= {validation['n_max']}")
    for n, labels in validation['failures'].items():
        lines.append(f"  mismatch at n={n}: {', '.join(labels)}")
    lines.append(f"seed window = {len(document['seed_window'])}")
    for state in document['seed_window']:
        lines.append(f"  {state['n']:>4}: {_bits(state)}")
    lines.append(f"closure size = {document['closure_size']}     iterations = {document['closure_iterations']}")
    for key, value in document['stats'].items():
        lines.append(f"{key} = {value}")
    lines.append(f"verdict = {document['verdict']}")
    lines.append(f"witness = {document['witness']}     confirmed = {document['witness_confirmed']}")
    return '\n'.join(lines)


def render_certificate_pdf(document, path):
    """Write the certificate as an A4 PDF."""
    from reportlab.lib import colors
    from reportlab.lib.pagesizes import A4
    from reportlab.lib.styles import ParagraphStyle, getSampleStyleSheet
    from reportlab.lib.units import mm
    from reportlab.platypus import Paragraph, Preformatted, SimpleDocTemplate, Spacer, Table, TableStyle

    doc = SimpleDocTemplate(
        str(path),
        pagesize=A4,
        leftMargin=12 * mm,
        rightMargin=12 * mm,
        topMargin=12 * mm,
        bottomMargin=12 * mm,
    )
    styles = getSampleStyleSheet()
    header_style = ParagraphStyle(
        'CertificateHeader',
        parent=styles['Heading1'],
        fontSize=16,
        textColor=colors.HexColor('#333333'),
        spaceAfter=6,
        alignment=1,
    )
    code_style = ParagraphStyle('Recurrences', parent=styles['Code'], fontSize=7, leading=9)

    story = [
        Paragraph(f"Apwenian certificate for {document['pattern']}", header_style),
        Spacer(1, 4 * mm),
    ]
    summary = [
        ['Pattern', document['pattern']],
        ['Length d', str(document['d'])],
        ['P / Q', f"{document['P']} / {document['Q']}"],
        ['Verdict', document['verdict']],
        ['Witness', str(document['witness'])],
        ['Validity floor', str(document['n_valid'])],
        ['Seed window', str(len(document['seed_window']))],
        ['Closure', f"{document['closure_size']} triples, {document['closure_iterations']} iterations"],
    ]
    table = Table(summary, colWidths=[40 * mm, 120 * mm])
    table.setStyle(TableStyle([
        ('BACKGROUND', (0, 0), (0, -1), colors.HexColor('#f0f0f0')),
        ('GRID', (0, 0), (-1, -1), 0.5, colors.HexColor('#cccccc')),
        ('FONTSIZE', (0, 0), (-1, -1), 9),
        ('VALIGN', (0, 0), (-1, -1), 'TOP'),
    ]))
    story.append(table)
    for run in document['recurrences']:
        story.append(Spacer(1, 5 * mm))
        story.append(Paragraph(
            f"<b>{run['direction']}</b> ({run['listed_types']} listed types)", styles['Normal'],
        ))
        story.append(Preformatted('\n'.join(run['lines']), code_style))
    doc.build(story)
    logger.info(f"Certificate PDF written to {path}")
    return path

