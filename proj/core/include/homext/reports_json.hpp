#ifndef HOMEXT_REPORTS_JSON_HPP
#define HOMEXT_REPORTS_JSON_HPP

#include "json.hpp"

#include "homext/audit.hpp"

namespace homext {

using ojson = nlohmann::ordered_json;

/// JSON views of every report type. Key order is fixed by emission, so
/// parse + re-dump round-trips byte-identically.
ojson report_json(const ValidationReport& r);
ojson report_json(const LocalityWitness& w);
ojson report_json(const ExtProfile& p);
ojson report_json(const Certificate& c);
ojson report_json(const ExtDegreeReport& r);
ojson report_json(const CMReport& r);
ojson report_json(const PeriodicityCertificate& c);
ojson report_json(const PdReport& r);
ojson report_json(const GarcVerdict& v);
ojson report_json(const GorensteinSymmetryReport& r);
ojson report_json(const DualitySymmetryReport& r);
ojson report_json(const AuslanderBoundProbe& p);
ojson report_json(const FamilyAuditReport& r);

/// Betti table + termination/periodicity findings for the resolve command.
ojson resolution_report_json(const Resolution& r,
                             const std::optional<PeriodicityCertificate>& cert);

}  // namespace homext

#endif
